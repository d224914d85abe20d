#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "rhobind/graph.hpp"
#include "rhobind/polynomial.hpp"
#include "rhobind/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<rhobind::Rational> : GenericNumTraits<rhobind::Rational> {
  typedef rhobind::Rational Real;
  typedef rhobind::Rational NonInteger;
  typedef rhobind::Rational Nested;
  static inline Real epsilon() { return rhobind::Rational(0); }
  static inline Real dummy_precision() { return rhobind::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4,
  };
};

}  // namespace Eigen

namespace rhobind {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<std::int64_t>;
using RatMatrix = Mat<Rational>;

IntMatrix adjacency_matrix(const Graph& g);

/// Ordered list of pairwise disjoint nonempty blocks covering 0..n-1.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  void validate(int n) const;
};

/// Block-averaged matrix: entry (i,j) is the average number of block-j
/// endpoints seen from a block-i vertex. Exact rational output.
RatMatrix quotient_matrix(const IntMatrix& m, const Partition& p);

/// True when every vertex of block i has the same row sum into block j,
/// for all i, j (so the quotient loses no spectral information at the top).
bool is_equitable(const IntMatrix& m, const Partition& p);

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence,
/// ascending coefficients, leading coefficient 1. Exact for exact scalars:
/// every division by k is exact in that case.
template <typename Scalar>
std::vector<Scalar> char_poly(const Mat<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw DomainError("characteristic polynomial needs a square matrix");
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = Scalar(1);
  Mat<Scalar> b = Mat<Scalar>::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    Mat<Scalar> ab = a * b;
    Scalar tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += ab(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Scalar(static_cast<std::int64_t>(k));
    b = ab;
    for (Eigen::Index i = 0; i < n; ++i) b(i, i) += c[static_cast<std::size_t>(n - k)];
  }
  return c;
}

/// Exact integer characteristic polynomial of an integer matrix (cap ~16).
IntPolynomial char_poly_exact(const IntMatrix& m);

/// Characteristic polynomial of a rational matrix, ascending, monic.
std::vector<Rational> char_poly_exact(const RatMatrix& m);

/// Multiply by the lcm of denominators to obtain integer coefficients.
IntPolynomial clear_denominators(const std::vector<Rational>& ascending);

}  // namespace rhobind
