#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "rhobind/errors.hpp"

namespace rhobind {

/// Simple undirected graph on vertices 0..n-1, adjacency kept as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  long edge_count() const { return m_; }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);  // idempotent; loops are rejected

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  int words_per_row() const { return w_; }
  std::uint64_t row_word(int v, int w) const { return bits_[static_cast<std::size_t>(v) * w_ + w]; }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int w_ = 0;  // 64-bit words per adjacency row
  long m_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Ascending list of distinct vertices.
struct VertexSet {
  std::vector<int> members;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs);
  explicit VertexSet(std::vector<int> vs);

  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool contains(int v) const;
  std::string str() const;  // "{0,3,5}"

  bool operator==(const VertexSet&) const = default;
};

/// Result of deleting a vertex set: the components of what is left.
struct RemovalAnalysis {
  VertexSet removed;
  int component_count = 0;
  std::vector<VertexSet> components;  // ordered by smallest member
  int isolated_count = 0;
};

Graph complete(int n);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph k_copies(int k, const Graph& g);
Graph join(const Graph& a, const Graph& b);

VertexSet neighborhood(const Graph& g, const VertexSet& s);
RemovalAnalysis remove_and_analyze(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

/// All connected graphs on n vertices (1 <= n <= 8), one per isomorphism
/// class, in ascending canonical-code order.
std::vector<Graph> enumerate_connected(int n);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Lexicographically minimal upper-triangle adjacency bitstring over all
/// vertex relabelings, packed into a uint64 (requires n <= 11). Bits run
/// column by column, the same order the graph6 format uses.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

}  // namespace rhobind
