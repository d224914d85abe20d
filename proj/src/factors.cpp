#include "rhobind/factors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace rhobind {

HAssignment HAssignment::from_ones_mask(int n, std::uint64_t mask) {
  if (n < 0 || n > 63) throw DomainError("mask form limited to order 63");
  if (n < 64 && (mask >> n)) throw DomainError("mask has bits beyond the order");
  std::vector<DegreeSet> v(static_cast<std::size_t>(n), DegreeSet::ZeroTwo);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) v[static_cast<std::size_t>(i)] = DegreeSet::One;
  return HAssignment(std::move(v));
}

HAssignment HAssignment::from_bits(const std::string& bits) {
  std::vector<DegreeSet> v;
  v.reserve(bits.size());
  for (char c : bits) {
    if (c == '1')
      v.push_back(DegreeSet::One);
    else if (c == '0')
      v.push_back(DegreeSet::ZeroTwo);
    else
      throw DomainError("assignment bitstring must be over {0,1}");
  }
  return HAssignment(std::move(v));
}

int HAssignment::ones_count() const {
  int c = 0;
  for (DegreeSet d : v_)
    if (d == DegreeSet::One) ++c;
  return c;
}

std::string HAssignment::bits() const {
  std::string s;
  s.reserve(v_.size());
  for (DegreeSet d : v_) s += (d == DegreeSet::One) ? '1' : '0';
  return s;
}

namespace {

void check_sizes(const Graph& g, const HAssignment& h) {
  if (h.size() != g.order()) throw DomainError("assignment size must match graph order");
}

}  // namespace

bool verify_h_factor(const Graph& g, const HAssignment& h, const FactorSubgraph& f) {
  check_sizes(g, h);
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::pair<int, int>> seen;
  for (auto [u, v] : f.edges) {
    if (u > v) std::swap(u, v);
    if (!g.adjacent(u, v)) throw DomainError("factor edge not present in the host graph");
    seen.emplace_back(u, v);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw DomainError("factor edge listed twice");
  for (int v = 0; v < g.order(); ++v) {
    const int d = deg[static_cast<std::size_t>(v)];
    if (h.at(v) == DegreeSet::One ? (d != 1) : (d != 0 && d != 2)) return false;
  }
  return true;
}

namespace {

struct FactorSearch {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> cap;        // 1 for One, 2 for ZeroTwo
  std::vector<int> remaining;  // undecided edges incident to v
  std::vector<int> deg;        // chosen edges incident to v
  std::vector<char> chosen;
  const HAssignment* h = nullptr;

  // After remaining[v] changed: can v still reach an allowed degree?
  bool viable(int v) const {
    const int d = deg[static_cast<std::size_t>(v)];
    const int r = remaining[static_cast<std::size_t>(v)];
    if (h->at(v) == DegreeSet::One) return d == 1 || (d == 0 && r >= 1);
    return d == 0 || d == 2 || (d == 1 && r >= 1);
  }

  bool run(std::size_t k) {
    if (k == edges.size()) return true;
    const auto [u, v] = edges[k];
    --remaining[static_cast<std::size_t>(u)];
    --remaining[static_cast<std::size_t>(v)];
    // exclude first: the all-zero selection is the canonical "empty factor"
    if (viable(u) && viable(v) && run(k + 1)) {
      chosen[k] = 0;
      return true;
    }
    if (deg[static_cast<std::size_t>(u)] < cap[static_cast<std::size_t>(u)] &&
        deg[static_cast<std::size_t>(v)] < cap[static_cast<std::size_t>(v)]) {
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
      if (viable(u) && viable(v) && run(k + 1)) {
        chosen[k] = 1;
        return true;
      }
      --deg[static_cast<std::size_t>(u)];
      --deg[static_cast<std::size_t>(v)];
    }
    ++remaining[static_cast<std::size_t>(u)];
    ++remaining[static_cast<std::size_t>(v)];
    return false;
  }
};

}  // namespace

std::optional<FactorSubgraph> find_h_factor(const Graph& g, const HAssignment& h) {
  check_sizes(g, h);
  if (g.order() > kFactorSearchMaxOrder)
    throw CapExceededError("factor search limited to order 16");
  if (h.ones_count() % 2 != 0) return std::nullopt;  // handshaking

  FactorSearch fs;
  fs.edges = g.edges();
  fs.h = &h;
  const std::size_t n = static_cast<std::size_t>(g.order());
  fs.cap.assign(n, 0);
  fs.remaining.assign(n, 0);
  fs.deg.assign(n, 0);
  fs.chosen.assign(fs.edges.size(), 0);
  for (std::size_t v = 0; v < n; ++v)
    fs.cap[v] = (h.at(static_cast<int>(v)) == DegreeSet::One) ? 1 : 2;
  for (auto [u, v] : fs.edges) {
    ++fs.remaining[static_cast<std::size_t>(u)];
    ++fs.remaining[static_cast<std::size_t>(v)];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!fs.viable(static_cast<int>(v))) return std::nullopt;  // e.g. One on an isolated vertex

  if (!fs.run(0)) return std::nullopt;
  FactorSubgraph out;
  for (std::size_t k = 0; k < fs.edges.size(); ++k)
    if (fs.chosen[k]) out.edges.push_back(fs.edges[k]);
  return out;
}

namespace {

// Number of components of the subgraph induced on `live` (a vertex bitmask).
int masked_components(const std::vector<std::uint64_t>& rows, std::uint64_t live) {
  int count = 0;
  std::uint64_t rem = live;
  while (rem) {
    std::uint64_t comp = 0;
    std::uint64_t stack = rem & (~rem + 1);
    while (stack) {
      const int v = std::countr_zero(stack);
      stack &= stack - 1;
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (comp & bit) continue;
      comp |= bit;
      stack |= rows[static_cast<std::size_t>(v)] & live & ~comp;
    }
    rem &= ~comp;
    ++count;
  }
  return count;
}

// Ascending-vertex-list lexicographic order on bitmask sets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<std::uint64_t> bit_rows(const Graph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()), 0);
  for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.row_word(v, 0);
  return rows;
}

VertexSet mask_to_set(std::uint64_t mask) {
  std::vector<int> vs;
  while (mask) {
    vs.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return VertexSet(std::move(vs));
}

}  // namespace

DeficiencyResult lu_kano_deficiency(const Graph& g) {
  if (!is_connected(g)) throw DomainError("deficiency scan needs a connected graph");
  const int n = g.order();
  if (n > kDeficiencyMaxOrder) throw CapExceededError("deficiency scan limited to order 24");
  const auto rows = bit_rows(g);
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

  int best = std::numeric_limits<int>::min();
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const int def = masked_components(rows, full & ~mask) - std::popcount(mask);
    if (def > best) {
      best = def;
      best_mask = mask;
    } else if (def == best) {
      const int sz = std::popcount(mask);
      const int bsz = std::popcount(best_mask);
      if (sz < bsz || (sz == bsz && lex_less(mask, best_mask))) best_mask = mask;
    }
  }
  return {best, mask_to_set(best_mask)};
}

bool has_all_h_factors(const Graph& g) {
  if (!is_connected(g)) throw DomainError("criterion needs a connected graph");
  const int n = g.order();
  if (n > kDeficiencyMaxOrder) throw CapExceededError("criterion scan limited to order 24");
  const auto rows = bit_rows(g);
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  for (std::uint64_t mask = 0; mask <= full; ++mask)
    if (masked_components(rows, full & ~mask) - std::popcount(mask) >= 2) return false;
  return true;
}

std::vector<HAssignment> all_even_h_assignments(int n) {
  if (n < 1) throw DomainError("assignment enumeration needs order >= 1");
  if (n > kAssignmentEnumMaxOrder)
    throw CapExceededError("assignment enumeration limited to order 10");
  std::vector<HAssignment> out;
  out.reserve(std::size_t{1} << (n - 1));
  detail::for_each_even_assignment(n, [&](const HAssignment& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

BindingResult binding_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {std::nullopt, {}};
  if (n > kBindingMaxOrder) throw CapExceededError("binding scan limited to order 22");
  const auto rows = bit_rows(g);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  bool have = false;
  Rational best;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::uint64_t nh = 0;
    std::uint64_t rest = mask;
    while (rest) {
      nh |= rows[static_cast<std::size_t>(std::countr_zero(rest))];
      rest &= rest - 1;
    }
    if (nh == full) continue;
    const Rational r(std::popcount(nh), std::popcount(mask));
    if (!have || r < best) {
      have = true;
      best = r;
      best_mask = mask;
    }
  }
  if (!have) return {std::nullopt, {}};  // unreachable for n >= 1: singletons qualify
  return {best, mask_to_set(best_mask)};
}

bool is_one_binding(const Graph& g) {
  const BindingResult b = binding_number(g);
  return !b.value.has_value() || *b.value >= Rational(1);
}

bool parity_obstruction(const Graph& g, const HAssignment& h, const VertexSet& s) {
  check_sizes(g, h);
  const RemovalAnalysis ra = remove_and_analyze(g, s);
  int odd_components = 0;
  for (const VertexSet& comp : ra.components) {
    int ones = 0;
    for (int v : comp.members)
      if (h.at(v) == DegreeSet::One) ++ones;
    if (ones % 2 != 0) ++odd_components;
  }
  long capacity = 0;
  for (int v : s.members) capacity += (h.at(v) == DegreeSet::One) ? 1 : 2;
  return odd_components > capacity;
}

namespace detail {

void for_each_even_assignment(int n, const std::function<bool(const HAssignment&)>& fn) {
  if (n < 1 || n > 63) throw DomainError("assignment streaming limited to 1..63");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0;; ++mask) {
    if (std::popcount(mask) % 2 == 0) {
      if (!fn(HAssignment::from_ones_mask(n, mask))) return;
    }
    if (mask == full) return;
  }
}

}  // namespace detail

}  // namespace rhobind
