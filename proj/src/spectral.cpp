#include "rhobind/spectral.hpp"

#include <cmath>

#include "rhobind/matrices.hpp"

namespace rhobind {

namespace {

// Power iteration on A + I. The shift keeps the method convergent on
// bipartite graphs (whose spectrum is symmetric, so iterating on A alone
// would oscillate between the +r and -r eigenspaces); it changes neither
// the eigenvectors nor the Rayleigh quotient reported for A itself.
PerronData power_iterate(const Eigen::MatrixXd& a, double tol) {
  const Eigen::Index n = a.rows();
  PerronData out;
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double res = 0.0;
  for (long iter = 1; iter <= kPowerIterationCap; ++iter) {
    Eigen::VectorXd ax = a * x;
    const double rho = x.dot(ax);
    res = (ax - rho * x).lpNorm<Eigen::Infinity>();
    if (res <= tol) {
      out.radius = rho;
      out.vector = x;
      out.residual = res;
      out.iterations = iter;
      return out;
    }
    Eigen::VectorXd y = ax + x;
    x = y / y.norm();
  }
  throw ConvergenceError("power iteration did not converge", res);
}

}  // namespace

PerronData spectral_radius(const Graph& g, double tol) {
  if (g.order() < 1) throw DomainError("spectral radius needs order >= 1");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  const auto parts = remove_and_analyze(g, {});
  const Eigen::MatrixXd a = adjacency_matrix(g).cast<double>();
  if (parts.component_count == 1) {
    return power_iterate(a, tol);
  }
  PerronData best;
  const VertexSet* best_comp = nullptr;
  long iterations = 0;
  for (const VertexSet& comp : parts.components) {
    const int k = comp.size();
    Eigen::MatrixXd sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        sub(i, j) = a(comp.members[static_cast<std::size_t>(i)], comp.members[static_cast<std::size_t>(j)]);
    PerronData pd = power_iterate(sub, tol);
    iterations += pd.iterations;
    if (best_comp == nullptr || pd.radius > best.radius) {
      best = pd;
      best_comp = &comp;
    }
  }
  Eigen::VectorXd full = Eigen::VectorXd::Zero(g.order());
  for (int i = 0; i < best_comp->size(); ++i)
    full(best_comp->members[static_cast<std::size_t>(i)]) = best.vector(i);
  best.vector = full;
  best.iterations = iterations;
  return best;
}

PerronData perron_vector(const Graph& g, double tol) {
  if (!is_connected(g)) throw DomainError("Perron vector needs a connected graph");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  return power_iterate(adjacency_matrix(g).cast<double>(), tol);
}

double largest_real_root(const IntPolynomial& p, double tol) {
  if (p.degree() < 1) throw DomainError("root finding needs degree >= 1");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  const auto& c = p.coeffs();
  const double lead = static_cast<double>(p.leading());

  // Cauchy bound: all roots lie in |x| <= 1 + max |a_i / a_d|.
  double maxratio = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    maxratio = std::max(maxratio, std::abs(static_cast<double>(c[i]) / lead));
  const double hi = 1.0 + maxratio;

  // p has the sign of its leading coefficient at hi. Scan downward for the
  // first sign change; its right end brackets the largest real root.
  const double sign_at_inf = lead > 0 ? 1.0 : -1.0;
  const int steps = 4096;
  const double step = 2.0 * hi / steps;
  double a = hi, b = hi;
  bool found = false;
  for (int i = 1; i <= steps; ++i) {
    a = hi - i * step;
    const double va = p(a);
    if (va == 0.0) return a;
    if ((va > 0 ? 1.0 : -1.0) != sign_at_inf) {
      found = true;
      break;
    }
    b = a;
  }
  if (!found) throw RootIsolationError("no sign change found below the Cauchy bound");

  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    const double vm = p(mid);
    if (vm == 0.0) return mid;
    if ((vm > 0 ? 1.0 : -1.0) == sign_at_inf) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace rhobind
