#pragma once

#include <string>
#include <vector>

#include "rhobind/graph.hpp"
#include "rhobind/matrices.hpp"
#include "rhobind/polynomial.hpp"

namespace rhobind {

/// Margin below which a strict-inequality case check is considered failed.
inline constexpr double kCaseMargin = 1e-6;

/// K_s joined to a disjoint union of cliques whose orders are `parts`
/// (kept ascending here; builders below fix their own block layouts).
struct CliqueJoinSpec {
  int s = 0;
  std::vector<int> parts;

  static CliqueJoinSpec make(int s, std::vector<int> parts);
  int order() const;
};

/// Layout: K_s block first, then each clique part contiguously in order.
Graph build_clique_join(const CliqueJoinSpec& spec);

/// K_s v (K_{n-2s-2} u K_2 u s K_1), blocks in that order. Needs n >= 2s+4.
Graph build_G2(int n, int s);

/// K_1 v (K_{n-4} u K_2 u K_1), blocks in that order. Needs n >= 5.
Graph build_Gstar(int n);

/// K_s v (s+4) K_1, independent part last.
Graph build_independent_join(int s);

/// Four blocks of build_G2: clique, large part, K_2 part, singleton part.
Partition partition_G2(int n, int s);

/// Three blocks of build_G2(2s+4, s): clique, both K_2 parts merged, singletons.
Partition partition_G2_boundary(int s);

/// Two blocks of build_independent_join.
Partition partition_independent_join(int s);

Partition partition_Gstar(int n);

// Closed-form quotient characteristic polynomials (monic, exact).
IntPolynomial phi_B2(int n, int s);    // s >= 1, n >= 2s+4
IntPolynomial phi_B3(int s);           // s >= 1 (arises at n = 2s+4)
IntPolynomial phi_B4(int s);           // s >= 1
IntPolynomial phi_Bstar(int n);        // n >= 5

// Sign-analysis helpers (exact coefficients; evaluate via IntPolynomial).
IntPolynomial aux_f(int n, int s);     // s >= 2; phi_Bstar - phi_B2 = (s-1) * aux_f
IntPolynomial aux_g(int s);            // s >= 2; polynomial in n
IntPolynomial aux_h(int s);            // s >= 4; phi_Bstar - x*phi_B3 at n = 2s+4

struct Lemma22Result {
  int n = 0;
  double lhs_radius = 0.0;
  double rhs_radius = 0.0;
  double margin = 0.0;  // rhs - lhs, strict under the hypotheses
  bool passed = false;
};

/// Compare rho(K_s v union of cliques `parts`) against the dominating
/// family member rho(K_s v (K_{n-s-t-p+2} u K_p u (t-2) K_1)).
/// Requires 1 <= p <= second-largest part and largest part < n-s-t-p+2.
Lemma22Result check_lemma22(int s, std::vector<int> parts, int p, double tol = 1e-10);

struct CaseCheckRecord {
  int n = 0;
  int s = 0;
  int case_id = 0;
  double rho_G2 = 0.0;
  double rho_Gstar = 0.0;
  double phi_star_at_rho = 0.0;  // phi_Bstar(n) evaluated at rho_G2
  double margin = 0.0;           // rho_Gstar - rho_G2
  bool passed = false;

  std::string csv_row() const;
};

inline constexpr const char* kCaseCsvHeader =
    "n,s,case,rho_G2,rho_Gstar,phi_star_at_rho,margin,passed";

/// n >= 2s+5, s >= 2: rho(G_2) must satisfy phi_Bstar < -margin at rho,
/// sit above n-s-3, and stay below rho(G_*).
CaseCheckRecord check_case1(int n, int s);

/// Boundary order n = 2s+4, s >= 4; lower bound (3/2)s + 1.
CaseCheckRecord check_case2(int s);

}  // namespace rhobind
