#include "rhobind/matrices.hpp"

#include <numeric>

namespace rhobind {

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix m = IntMatrix::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    m(u, v) = 1;
    m(v, u) = 1;
  }
  return m;
}

void Partition::validate(int n) const {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw DomainError("partition block is empty");
    for (int v : block) {
      if (v < 0 || v >= n) throw DomainError("partition member out of range");
      if (seen[static_cast<std::size_t>(v)]) throw DomainError("partition blocks overlap");
      seen[static_cast<std::size_t>(v)] = 1;
      ++covered;
    }
  }
  if (covered != n) throw DomainError("partition does not cover all vertices");
}

RatMatrix quotient_matrix(const IntMatrix& m, const Partition& p) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw DomainError("quotient needs a square matrix");
  p.validate(n);
  const int t = p.block_count();
  RatMatrix q(t, t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      std::int64_t total = 0;
      for (int u : p.blocks[static_cast<std::size_t>(i)])
        for (int v : p.blocks[static_cast<std::size_t>(j)])
          total = checked::add(total, m(u, v));
      q(i, j) = Rational(total, static_cast<std::int64_t>(p.blocks[static_cast<std::size_t>(i)].size()));
    }
  }
  return q;
}

bool is_equitable(const IntMatrix& m, const Partition& p) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw DomainError("equitability needs a square matrix");
  p.validate(n);
  for (const auto& bi : p.blocks) {
    for (const auto& bj : p.blocks) {
      std::int64_t first = 0;
      bool have = false;
      for (int u : bi) {
        std::int64_t sum = 0;
        for (int v : bj) sum = checked::add(sum, m(u, v));
        if (!have) {
          first = sum;
          have = true;
        } else if (sum != first) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

constexpr int kCharPolyMaxOrder = 16;

}  // namespace

IntPolynomial char_poly_exact(const IntMatrix& m) {
  if (m.rows() > kCharPolyMaxOrder)
    throw CapExceededError("exact characteristic polynomial limited to order 16");
  RatMatrix r = m.cast<Rational>();
  std::vector<Rational> c = char_poly<Rational>(r);
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_integer())
      throw Error("integer matrix produced a non-integer coefficient");  // unreachable
    out[i] = c[i].num();
  }
  return IntPolynomial(std::move(out));
}

std::vector<Rational> char_poly_exact(const RatMatrix& m) { return char_poly<Rational>(m); }

IntPolynomial clear_denominators(const std::vector<Rational>& ascending) {
  std::int64_t l = 1;
  for (const Rational& r : ascending) l = checked::mul(l / std::gcd(l, r.den()), r.den());
  std::vector<std::int64_t> out(ascending.size());
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    Rational scaled = ascending[i] * Rational(l);
    out[i] = scaled.num();
  }
  return IntPolynomial(std::move(out));
}

}  // namespace rhobind
