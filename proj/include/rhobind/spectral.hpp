#pragma once

#include <Eigen/Core>

#include "rhobind/graph.hpp"
#include "rhobind/polynomial.hpp"

namespace rhobind {

inline constexpr double kDefaultPowerTol = 1e-10;
inline constexpr double kDefaultRootTol = 1e-9;
inline constexpr long kPowerIterationCap = 1'000'000;

struct PerronData {
  double radius = 0.0;
  Eigen::VectorXd vector;  // unit 2-norm, entrywise >= 0
  double residual = 0.0;   // ||A x - radius x||_inf on the adjacency matrix
  long iterations = 0;
};

/// Largest adjacency eigenvalue of g. Disconnected input is handled per
/// component; the returned vector is the winning component's Perron vector
/// zero-padded to all of V.
PerronData spectral_radius(const Graph& g, double tol = kDefaultPowerTol);

/// Perron vector of a connected graph (errors on disconnected input).
PerronData perron_vector(const Graph& g, double tol = kDefaultPowerTol);

/// Largest real root, assuming one exists; brackets by a Cauchy bound and
/// a descending scan, then bisects to tol.
double largest_real_root(const IntPolynomial& p, double tol = kDefaultRootTol);

}  // namespace rhobind
