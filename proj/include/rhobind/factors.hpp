#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rhobind/graph.hpp"
#include "rhobind/rational.hpp"

namespace rhobind {

inline constexpr int kFactorSearchMaxOrder = 16;
inline constexpr int kDeficiencyMaxOrder = 24;
inline constexpr int kBindingMaxOrder = 22;
inline constexpr int kAssignmentEnumMaxOrder = 10;

/// Allowed degree set per vertex: exactly 1, or one of {0, 2}.
enum class DegreeSet : std::uint8_t { One, ZeroTwo };

/// A degree prescription with an even number of One vertices ("even" case).
class HAssignment {
 public:
  HAssignment() = default;
  explicit HAssignment(std::vector<DegreeSet> per_vertex) : v_(std::move(per_vertex)) {}

  static HAssignment all_zero_two(int n) {
    return HAssignment(std::vector<DegreeSet>(static_cast<std::size_t>(n), DegreeSet::ZeroTwo));
  }
  static HAssignment from_ones_mask(int n, std::uint64_t mask);
  /// Bitstring, one char per vertex: '1' = One, '0' = ZeroTwo.
  static HAssignment from_bits(const std::string& bits);

  int size() const { return static_cast<int>(v_.size()); }
  DegreeSet at(int v) const { return v_.at(static_cast<std::size_t>(v)); }
  int ones_count() const;
  bool is_even() const { return ones_count() % 2 == 0; }
  std::string bits() const;

  bool operator==(const HAssignment&) const = default;

 private:
  std::vector<DegreeSet> v_;
};

struct FactorSubgraph {
  std::vector<std::pair<int, int>> edges;  // sorted, u < v
};

/// Check that `edges` are host edges, pairwise distinct, and give every
/// vertex a degree allowed by h.
bool verify_h_factor(const Graph& g, const HAssignment& h, const FactorSubgraph& f);

/// Backtracking search over host edges in lexicographic order, exclude
/// branch first; returns the first factor found, or nullopt.
std::optional<FactorSubgraph> find_h_factor(const Graph& g, const HAssignment& h);

struct DeficiencyResult {
  int max_deficiency = 0;  // max over S of (components of G - S) - |S|
  VertexSet witness;
};

/// Exhaustive scan of all vertex subsets S (including empty and full).
/// Ties prefer smaller |S|, then the lexicographically smaller sorted list.
DeficiencyResult lu_kano_deficiency(const Graph& g);

/// Criterion form: a connected graph has every even prescription realizable
/// iff no S leaves more than |S| + 1 components.
bool has_all_h_factors(const Graph& g);

/// All even prescriptions on n vertices, ascending by One-set mask.
std::vector<HAssignment> all_even_h_assignments(int n);

struct BindingResult {
  std::optional<Rational> value;  // nullopt encodes +infinity (order 0)
  VertexSet witness;
};

/// min |N(S)| / |S| over nonempty S with N(S) != V, exact arithmetic.
/// The witness is the first minimizer in ascending mask order.
BindingResult binding_number(const Graph& g);

bool is_one_binding(const Graph& g);

/// Certificate that (g, h) admits no factor: removing s leaves more
/// components of odd One-count than the degrees available inside s can
/// absorb. Each odd component must send an odd (hence >= 1) number of
/// factor edges across to s, and s can take at most sum of its caps.
bool parity_obstruction(const Graph& g, const HAssignment& h, const VertexSet& s);

namespace detail {

/// Stream even prescriptions in ascending mask order; callback returns
/// false to stop early. No order cap: callers bound n themselves.
void for_each_even_assignment(int n, const std::function<bool(const HAssignment&)>& fn);

}  // namespace detail

}  // namespace rhobind
