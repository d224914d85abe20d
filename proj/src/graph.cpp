#include "rhobind/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace rhobind {

Graph::Graph(int n) : n_(n), w_((n + 63) / 64) {
  if (n < 0) throw DomainError("graph order must be nonnegative");
  bits_.assign(static_cast<std::size_t>(n_) * w_, 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * w_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loops are not allowed");
  if (adjacent(u, v)) return;
  bits_[static_cast<std::size_t>(u) * w_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * w_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < w_; ++w) d += std::popcount(row_word(v, w));
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int w = 0; w < w_; ++w) {
    std::uint64_t bits = row_word(v, w);
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet::VertexSet(std::initializer_list<int> vs) : VertexSet(std::vector<int>(vs)) {}

VertexSet::VertexSet(std::vector<int> vs) : members(std::move(vs)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::string VertexSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

Graph complete(int n) {
  if (n < 1) throw DomainError("complete graph needs order >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  const int off = a.order();
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

Graph k_copies(int k, const Graph& g) {
  if (k < 1) throw DomainError("copy count must be >= 1");
  Graph out = g;
  for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) g.add_edge(u, a.order() + v);
  return g;
}

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  for (int v : s.members)
    if (v < 0 || v >= g.order()) throw DomainError("vertex set member out of range");
}

}  // namespace

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(g.words_per_row()), 0);
  for (int v : s.members)
    for (int w = 0; w < g.words_per_row(); ++w) acc[static_cast<std::size_t>(w)] |= g.row_word(v, w);
  std::vector<int> out;
  for (int w = 0; w < g.words_per_row(); ++w) {
    std::uint64_t bits = acc[static_cast<std::size_t>(w)];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return VertexSet(std::move(out));
}

RemovalAnalysis remove_and_analyze(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  RemovalAnalysis res;
  res.removed = s;
  const int n = g.order();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int v : s.members) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen = gone;
  for (int v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> comp, stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    if (comp.size() == 1) ++res.isolated_count;
    res.components.emplace_back(std::move(comp));
  }
  res.component_count = static_cast<int>(res.components.size());
  return res;
}

bool is_connected(const Graph& g) {
  if (g.order() < 1) throw DomainError("connectivity needs order >= 1");
  return remove_and_analyze(g, {}).component_count == 1;
}

// ---------------------------------------------------------------------------
// graph6 codec. Header is N(n); payload packs the upper triangle column by
// column (for each j, bits (0,j)..(j-1,j)), six bits per character, offset 63.
// ---------------------------------------------------------------------------

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw Graph6HeaderError("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw Graph6CharError("graph6 character out of range");

  std::size_t pos = 0;
  long n = 0;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw Graph6HeaderError("graph6 order beyond supported range");
    if (s.size() < 4) throw Graph6HeaderError("graph6 header truncated");
    n = (static_cast<long>(s[1] - 63) << 12) | (static_cast<long>(s[2] - 63) << 6) |
        static_cast<long>(s[3] - 63);
    pos = 4;
  } else {
    n = s[0] - 63;
    pos = 1;
  }
  if (n > 5000) throw Graph6HeaderError("graph6 order beyond supported range");

  const long nbits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
  const std::size_t have = s.size() - pos;
  if (have < need) throw Graph6TruncatedError("graph6 bit payload truncated");
  if (have > need) throw Graph6Error("graph6 payload longer than expected");

  Graph g(static_cast<int>(n));
  long bit = 0;
  for (std::size_t k = 0; k < need; ++k) {
    int word = s[pos + k] - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      if (bit >= nbits) {
        if ((word >> b) & 1) throw Graph6Error("graph6 padding bits must be zero");
        continue;
      }
      if ((word >> b) & 1) {
        // invert bit index -> (i, j) with column-major upper triangle order
        long r = bit;
        long j = 1;
        while (r >= j) r -= j++;
        g.add_edge(static_cast<int>(r), static_cast<int>(j));
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else if (n <= 258047) {
    out += '~';
    out += static_cast<char>(63 + ((n >> 12) & 63));
    out += static_cast<char>(63 + ((n >> 6) & 63));
    out += static_cast<char>(63 + (n & 63));
  } else {
    throw DomainError("graph too large for this graph6 writer");
  }
  int word = 0, fill = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++fill == 6) {
        out += static_cast<char>(63 + word);
        word = fill = 0;
      }
    }
  }
  if (fill) out += static_cast<char>(63 + (word << (6 - fill)));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical codes and enumeration.
// ---------------------------------------------------------------------------

namespace {

constexpr int kCanonicalMaxOrder = 11;  // 55 triangle bits fit a uint64

struct CanonSearch {
  int n = 0;
  int total_bits = 0;
  std::uint64_t best = 0;
  std::uint16_t adj[12] = {};  // adjacency rows as bitmasks, order <= 11
  int perm[12] = {};
  bool used[12] = {};

  // Place position p; cur holds the first p(p-1)/2 triangle bits.
  void descend(int p, std::uint64_t cur, int bits) {
    if (p == n) {
      if (cur < best) best = cur;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t seg = 0;
      for (int i = 0; i < p; ++i) seg = (seg << 1) | ((adj[v] >> perm[i]) & 1u);
      std::uint64_t next = (cur << p) | seg;
      if (next > (best >> (total_bits - bits - p))) continue;
      perm[p] = v;
      used[v] = true;
      descend(p + 1, next, bits + p);
      used[v] = false;
    }
  }
};

std::uint64_t identity_code(const Graph& g) {
  // column-by-column upper triangle, matching the search's placement order
  std::uint64_t code = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1u : 0u);
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) throw CapExceededError("canonical code limited to order 11");
  if (n <= 1) return 0;
  CanonSearch cs;
  cs.n = n;
  cs.total_bits = n * (n - 1) / 2;
  cs.best = identity_code(g);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) cs.adj[u] |= static_cast<std::uint16_t>(1u << v);
  cs.descend(0, 0, 0);
  return cs.best;
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > kCanonicalMaxOrder) throw DomainError("order out of range for code");
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1) g.add_edge(i, j);
  return g;
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1) throw DomainError("enumeration needs order >= 1");
  if (n > 8) throw CapExceededError("connected enumeration limited to order 8");
  if (n == 1) return {Graph(1)};

  // Every connected graph on n vertices arises from a connected graph on
  // n-1 vertices by adding a vertex with a nonempty neighborhood, so
  // extending every smaller class by every nonempty attachment mask and
  // deduplicating by canonical code is exhaustive.
  std::set<std::uint64_t> codes;
  for (const Graph& g : enumerate_connected(n - 1)) {
    const auto base = g.edges();
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      Graph h(n);
      for (auto [u, v] : base) h.add_edge(u, v);
      for (int v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1) h.add_edge(v, n - 1);
      codes.insert(canonical_code(h));
    }
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
  return out;
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, const std::vector<int>& order, std::size_t k,
                   std::vector<int>& map, std::vector<char>& used) {
  if (k == order.size()) return true;
  const int u = order[k];
  for (int v = 0; v < b.order(); ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    if (a.degree(u) != b.degree(v)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      if (a.adjacent(order[i], u) != b.adjacent(map[static_cast<std::size_t>(order[i])], v))
        ok = false;
    if (!ok) continue;
    map[static_cast<std::size_t>(u)] = v;
    used[static_cast<std::size_t>(v)] = 1;
    if (iso_backtrack(a, b, order, k + 1, map, used)) return true;
    used[static_cast<std::size_t>(v)] = 0;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  if (n == 0) return true;

  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  if (n <= kCanonicalMaxOrder) return canonical_code(a) == canonical_code(b);

  // BFS order keeps each new vertex attached to already-mapped ones, which
  // makes the adjacency consistency check prune hard.
  std::vector<int> order;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  for (;;) {
    int seed = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[static_cast<std::size_t>(v)] && (seed == -1 || da[static_cast<std::size_t>(v)] > da[static_cast<std::size_t>(seed)]))
        seed = v;
    if (seed == -1) break;
    std::vector<int> queue{seed};
    visited[static_cast<std::size_t>(seed)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      order.push_back(queue[head]);
      for (int w : a.neighbors(queue[head])) {
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  return iso_backtrack(a, b, order, 0, map, used);
}

}  // namespace rhobind
