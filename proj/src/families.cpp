#include "rhobind/families.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "rhobind/spectral.hpp"

namespace rhobind {

namespace ck = checked;

CliqueJoinSpec CliqueJoinSpec::make(int s, std::vector<int> parts) {
  if (s < 1) throw DomainError("clique join needs s >= 1");
  if (parts.empty()) throw DomainError("clique join needs at least one part");
  for (int p : parts)
    if (p < 1) throw DomainError("clique part orders must be >= 1");
  std::sort(parts.begin(), parts.end());
  return CliqueJoinSpec{s, std::move(parts)};
}

int CliqueJoinSpec::order() const {
  return s + std::accumulate(parts.begin(), parts.end(), 0);
}

namespace {

Graph build_layout(int s, const std::vector<int>& parts) {
  int n = s;
  for (int p : parts) n += p;
  Graph g(n);
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) g.add_edge(u, v);
  int off = s;
  for (int p : parts) {
    for (int u = off; u < off + p; ++u)
      for (int v = u + 1; v < off + p; ++v) g.add_edge(u, v);
    off += p;
  }
  for (int u = 0; u < s; ++u)
    for (int v = s; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::vector<int> contiguous(int lo, int hi) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (int v = lo; v < hi; ++v) out.push_back(v);
  return out;
}

void check_g2_args(int n, int s) {
  if (s < 1) throw DomainError("G_2 needs s >= 1");
  if (n < 2 * s + 4) throw DomainError("G_2 needs n >= 2s+4");
}

}  // namespace

Graph build_clique_join(const CliqueJoinSpec& spec) { return build_layout(spec.s, spec.parts); }

Graph build_G2(int n, int s) {
  check_g2_args(n, s);
  std::vector<int> parts{n - 2 * s - 2, 2};
  parts.insert(parts.end(), static_cast<std::size_t>(s), 1);
  return build_layout(s, parts);
}

Graph build_Gstar(int n) {
  if (n < 5) throw DomainError("G_* needs n >= 5");
  return build_layout(1, {n - 4, 2, 1});
}

Graph build_independent_join(int s) {
  if (s < 1) throw DomainError("independent join needs s >= 1");
  return build_layout(s, std::vector<int>(static_cast<std::size_t>(s) + 4, 1));
}

Partition partition_G2(int n, int s) {
  check_g2_args(n, s);
  const int a = n - 2 * s - 2;
  return Partition{{contiguous(0, s), contiguous(s, s + a), contiguous(s + a, s + a + 2),
                    contiguous(s + a + 2, n)}};
}

Partition partition_G2_boundary(int s) {
  if (s < 1) throw DomainError("boundary partition needs s >= 1");
  const int n = 2 * s + 4;
  return Partition{{contiguous(0, s), contiguous(s, s + 4), contiguous(s + 4, n)}};
}

Partition partition_independent_join(int s) {
  if (s < 1) throw DomainError("independent join needs s >= 1");
  return Partition{{contiguous(0, s), contiguous(s, 2 * s + 4)}};
}

Partition partition_Gstar(int n) {
  if (n < 5) throw DomainError("G_* needs n >= 5");
  return Partition{{contiguous(0, 1), contiguous(1, n - 3), contiguous(n - 3, n - 1),
                    contiguous(n - 1, n)}};
}

IntPolynomial phi_B2(int n, int s) {
  check_g2_args(n, s);
  const std::int64_t N = n, S = s;
  const std::int64_t s2 = ck::mul(S, S);
  const std::int64_t s3 = ck::mul(s2, S);
  // x^4 - (n-s-3) x^3 - (s^2+2s+1) x^2
  //     + (s^2 n + 2 s n + n - 2 s^3 - 6 s^2 - 7 s - 3) x - s^2 n + 2 s^3 + 3 s^2
  const std::int64_t c3 = ck::neg(N - S - 3);
  const std::int64_t c2 = ck::neg(ck::add(s2, 2 * S + 1));
  std::int64_t c1 = ck::mul(ck::add(s2, ck::add(2 * S, 1)), N);
  c1 = ck::sub(c1, ck::add(ck::mul(2, s3), ck::add(ck::mul(6, s2), ck::add(ck::mul(7, S), 3))));
  std::int64_t c0 = ck::sub(ck::add(ck::mul(2, s3), ck::mul(3, s2)), ck::mul(s2, N));
  return IntPolynomial({c0, c1, c2, c3, 1});
}

IntPolynomial phi_B3(int s) {
  if (s < 1) throw DomainError("phi_B3 needs s >= 1");
  const std::int64_t S = s;
  const std::int64_t s2 = ck::mul(S, S);
  // x^3 - s x^2 - (s^2+3s+1) x + s^2
  return IntPolynomial({s2, ck::neg(ck::add(s2, 3 * S + 1)), ck::neg(S), 1});
}

IntPolynomial phi_B4(int s) {
  if (s < 1) throw DomainError("phi_B4 needs s >= 1");
  const std::int64_t S = s;
  // x^2 - (s-1) x - s(s+4)
  return IntPolynomial({ck::neg(ck::mul(S, S + 4)), ck::neg(S - 1), 1});
}

IntPolynomial phi_Bstar(int n) {
  if (n < 5) throw DomainError("phi_Bstar needs n >= 5");
  const std::int64_t N = n;
  // x^4 - (n-4) x^3 - 4 x^2 + (4n-18) x - n + 5
  return IntPolynomial({ck::sub(5, N), ck::sub(ck::mul(4, N), 18), -4, ck::neg(N - 4), 1});
}

IntPolynomial aux_f(int n, int s) {
  if (s < 2) throw DomainError("aux_f needs s >= 2");
  const std::int64_t N = n, S = s;
  const std::int64_t s2 = ck::mul(S, S);
  // -x^3 + (s+3) x^2 - ((s+3) n - 2 s^2 - 8 s - 15) x + (s+1) n - 2 s^2 - 5 s - 5
  const std::int64_t c1 =
      ck::neg(ck::sub(ck::mul(S + 3, N), ck::add(ck::mul(2, s2), ck::add(ck::mul(8, S), 15))));
  const std::int64_t c0 =
      ck::sub(ck::mul(S + 1, N), ck::add(ck::mul(2, s2), ck::add(ck::mul(5, S), 5)));
  return IntPolynomial({c0, c1, S + 3, -1});
}

IntPolynomial aux_g(int s) {
  if (s < 2) throw DomainError("aux_g needs s >= 2");
  const std::int64_t S = s;
  const std::int64_t s2 = ck::mul(S, S);
  // -n^3 + (3s+9) n^2 - (2s^2+15s+20) n + 2s^2 + 10s + 4
  return IntPolynomial({ck::add(ck::mul(2, s2), ck::add(ck::mul(10, S), 4)),
                        ck::neg(ck::add(ck::mul(2, s2), ck::add(ck::mul(15, S), 20))),
                        ck::add(ck::mul(3, S), 9), -1});
}

IntPolynomial aux_h(int s) {
  if (s < 4) throw DomainError("aux_h needs s >= 4");
  const std::int64_t S = s;
  const std::int64_t s2 = ck::mul(S, S);
  // -s x^3 + (s^2+3s-3) x^2 - (s^2-8s+2) x - 2s + 1
  return IntPolynomial({ck::sub(1, ck::mul(2, S)), ck::neg(ck::add(ck::sub(s2, ck::mul(8, S)), 2)),
                        ck::sub(ck::add(s2, ck::mul(3, S)), 3), ck::neg(S)});
}

Lemma22Result check_lemma22(int s, std::vector<int> parts, int p, double tol) {
  if (s < 1) throw DomainError("lemma check needs s >= 1");
  if (parts.size() < 2) throw DomainError("lemma check needs at least two parts");
  for (int q : parts)
    if (q < 1) throw DomainError("part orders must be >= 1");
  if (p < 1) throw DomainError("lemma check needs p >= 1");
  std::sort(parts.begin(), parts.end());
  const int t = static_cast<int>(parts.size());
  if (p > parts[static_cast<std::size_t>(t - 2)])
    throw DomainError("p must not exceed the second-largest part");
  const int n = s + std::accumulate(parts.begin(), parts.end(), 0);
  const int big = n - s - t - p + 2;
  if (parts.back() >= big)
    throw DomainError("hypothesis violated: largest part must stay below n-s-t-p+2");

  const Graph lhs = build_layout(s, parts);
  std::vector<int> rhs_parts(static_cast<std::size_t>(t - 2), 1);
  rhs_parts.push_back(p);
  rhs_parts.push_back(big);
  const Graph rhs = build_layout(s, rhs_parts);

  Lemma22Result out;
  out.n = n;
  out.lhs_radius = spectral_radius(lhs, tol).radius;
  out.rhs_radius = spectral_radius(rhs, tol).radius;
  out.margin = out.rhs_radius - out.lhs_radius;
  out.passed = out.margin > 10.0 * tol;
  return out;
}

std::string CaseCheckRecord::csv_row() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.12g,%.12g,%.12g,%.12g,%s", n, s, case_id, rho_G2,
                rho_Gstar, phi_star_at_rho, margin, passed ? "true" : "false");
  return buf;
}

CaseCheckRecord check_case1(int n, int s) {
  if (s < 2) throw DomainError("case 1 needs s >= 2");
  if (n < 2 * s + 5) throw DomainError("case 1 needs n >= 2s+5");
  CaseCheckRecord rec;
  rec.n = n;
  rec.s = s;
  rec.case_id = 1;
  rec.rho_G2 = largest_real_root(phi_B2(n, s));
  rec.rho_Gstar = largest_real_root(phi_Bstar(n));
  rec.phi_star_at_rho = phi_Bstar(n)(rec.rho_G2);
  rec.margin = rec.rho_Gstar - rec.rho_G2;
  rec.passed = rec.phi_star_at_rho < -kCaseMargin && rec.rho_G2 > n - s - 3 &&
               rec.margin > kCaseMargin;
  return rec;
}

CaseCheckRecord check_case2(int s) {
  if (s < 4) throw DomainError("case 2 needs s >= 4");
  const int n = 2 * s + 4;
  CaseCheckRecord rec;
  rec.n = n;
  rec.s = s;
  rec.case_id = 2;
  rec.rho_G2 = largest_real_root(phi_B3(s));
  rec.rho_Gstar = largest_real_root(phi_Bstar(n));
  rec.phi_star_at_rho = phi_Bstar(n)(rec.rho_G2);
  rec.margin = rec.rho_Gstar - rec.rho_G2;
  rec.passed = rec.phi_star_at_rho < -kCaseMargin && rec.rho_G2 > 1.5 * s + 1 &&
               rec.margin > kCaseMargin;
  return rec;
}

}  // namespace rhobind
