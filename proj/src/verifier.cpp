#include "rhobind/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <tuple>

#include "rhobind/factors.hpp"
#include "rhobind/families.hpp"
#include "rhobind/spectral.hpp"
#include "rhobind/version.hpp"

namespace rhobind {

namespace {

/// Spectral comparisons against rho(G_*) use this slack: anything closer
/// than the margin is resolved by isomorphism, never by floats.
constexpr double kNearMargin = 1e-6;
/// Acceptance slack for "rho >= rho(G_*)" under power-iteration error.
constexpr double kHypothesisSlack = 1e-8;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void finalize(VerificationReport& r, const Stopwatch& sw) {
  r.version = kVersion;
  r.sort_violations();
  r.runtime_s = sw.seconds();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void VerificationReport::add_param(const std::string& key, const std::string& value) {
  parameters.emplace_back(key, value);
}

const std::string* VerificationReport::param(const std::string& key) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return &v;
  return nullptr;
}

void VerificationReport::sort_violations() {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.graph6, a.detail) < std::tie(b.graph6, b.detail);
  });
}

std::string VerificationReport::json_str(bool redact_runtime) const {
  nlohmann::ordered_json j;
  j["campaign"] = campaign;
  j["version"] = version;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["checked"] = checked;
  nlohmann::ordered_json viols = nlohmann::ordered_json::array();
  for (const Violation& v : violations)
    viols.push_back(nlohmann::ordered_json{{"graph6", v.graph6}, {"detail", v.detail}});
  j["violations"] = viols;
  j["runtime_s"] = redact_runtime ? 0.0 : runtime_s;
  j["passed"] = passed;
  return j.dump(2) + "\n";
}

std::string VerificationReport::csv_str(bool redact_runtime) const {
  std::string params;
  for (const auto& [k, v] : parameters) {
    if (!params.empty()) params += ";";
    params += k + "=" + v;
  }
  std::string out = "campaign,version,checked,violations,runtime_s,passed,parameters\n";
  out += campaign + "," + version + "," + std::to_string(checked) + "," +
         std::to_string(violations.size()) + "," +
         fmt_double(redact_runtime ? 0.0 : runtime_s) + "," + (passed ? "true" : "false") + ",\"" +
         params + "\"\n";
  return out;
}

// ---------------------------------------------------------------------------

VerificationReport verify_theorem11(int n_max) {
  if (n_max < 1) throw DomainError("campaign needs n_max >= 1");
  if (n_max > 7) throw CapExceededError("equivalence campaign limited to n_max = 7");
  Stopwatch sw;
  VerificationReport r;
  r.campaign = "thm11";
  r.add_param("n_max", std::to_string(n_max));

  std::string counts;
  for (int n = 1; n <= n_max; ++n) {
    const auto graphs = enumerate_connected(n);
    if (!counts.empty()) counts += ",";
    counts += std::to_string(graphs.size());
    for (const Graph& g : graphs) {
      ++r.checked;
      const bool criterion = has_all_h_factors(g);
      bool realizable = true;
      std::string missing;
      detail::for_each_even_assignment(n, [&](const HAssignment& h) {
        if (!find_h_factor(g, h)) {
          realizable = false;
          missing = h.bits();
          return false;
        }
        return true;
      });
      if (criterion != realizable) {
        r.violations.push_back(
            {write_graph6(g), "criterion=" + std::string(criterion ? "true" : "false") +
                                  " factor_search=" + (realizable ? "true" : "false") +
                                  (missing.empty() ? "" : " h=" + missing)});
      }
    }
  }
  r.add_param("connected_counts", counts);
  r.passed = r.violations.empty();
  finalize(r, sw);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

/// Nondecreasing part lists of given length t summing to `total`, with every
/// part from position `free_ones` on being >= 2 (earlier ones may be 1).
void for_each_part_list(int total, int t, int free_ones,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(static_cast<std::size_t>(t), 0);
  auto rec = [&](auto&& self, int idx, int remaining, int minval) -> void {
    if (idx == t) {
      if (remaining == 0) fn(parts);
      return;
    }
    const int lo = std::max(minval, idx >= free_ones ? 2 : 1);
    for (int v = lo; v <= remaining; ++v) {
      parts[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, remaining - v, v);
    }
  };
  rec(rec, 0, total, 1);
}

}  // namespace

VerificationReport verify_theorem12_family(int n, bool extended) {
  if (n < 11) throw DomainError("family scan needs n >= 11");
  Stopwatch sw;
  VerificationReport r;
  r.campaign = "thm12-family";
  r.add_param("n", std::to_string(n));
  r.add_param("extended", extended ? "true" : "false");

  const Graph gstar = build_Gstar(n);
  const double rho_star = spectral_radius(gstar).radius;
  r.add_param("rho_star", fmt_double(rho_star));

  long equality = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (int s = 1; 2 * s + 4 <= n; ++s) {
    const int t_max = extended ? s + 4 : s + 2;
    for (int t = s + 2; t <= t_max; ++t) {
      if (s + 2 * (t - s) > n - s) break;  // not enough room for the parts >= 2
      for_each_part_list(n - s, t, s, [&](const std::vector<int>& parts) {
        ++r.checked;
        const Graph g = build_clique_join(CliqueJoinSpec::make(s, parts));
        const double rho = spectral_radius(g).radius;
        const double gap = rho_star - rho;
        if (gap > kNearMargin) {
          min_margin = std::min(min_margin, gap);
          return;
        }
        if (is_isomorphic(g, gstar)) {
          ++equality;
          return;
        }
        r.violations.push_back({write_graph6(g),
                                "family member within margin of rho(G_*) but not G_*: rho=" +
                                    fmt_double(rho) + " rho_star=" + fmt_double(rho_star)});
      });
    }
  }
  r.add_param("equality_count", std::to_string(equality));
  r.add_param("min_margin", fmt_double(min_margin));
  r.passed = r.violations.empty() && equality == 1;
  finalize(r, sw);
  return r;
}

// ---------------------------------------------------------------------------

VerificationReport search_counterexample(int n, long samples, std::uint64_t seed) {
  if (n < 11) throw DomainError("search needs n >= 11");
  if (n > 13) throw CapExceededError("search limited to order 13 by the criterion scan");
  if (samples < 0) throw DomainError("sample count must be nonnegative");
  Stopwatch sw;
  VerificationReport r;
  r.campaign = "search";
  r.add_param("n", std::to_string(n));
  r.add_param("samples", std::to_string(samples));
  r.add_param("seed", std::to_string(seed));
  r.add_param("edge_probs", "0.7,0.8,0.9,0.95");

  const Graph gstar = build_Gstar(n);
  const double rho_star = spectral_radius(gstar).radius;
  r.add_param("rho_star", fmt_double(rho_star));

  const double probs[] = {0.7, 0.8, 0.9, 0.95};
  long hypothesis_met = 0, excluded_iso = 0, rejected = 0;

  auto consider = [&](const Graph& g) {
    ++r.checked;
    if (!is_connected(g)) {
      ++rejected;
      return;
    }
    if (spectral_radius(g).radius < rho_star - kHypothesisSlack) {
      ++rejected;
      return;
    }
    if (!is_one_binding(g)) {
      ++rejected;
      return;
    }
    if (is_isomorphic(g, gstar)) {
      ++excluded_iso;
      return;
    }
    ++hypothesis_met;
    if (!has_all_h_factors(g)) {
      const DeficiencyResult d = lu_kano_deficiency(g);
      r.violations.push_back({write_graph6(g),
                              "hypotheses hold but criterion fails: deficiency " +
                                  std::to_string(d.max_deficiency) + " at S=" + d.witness.str()});
    }
  };

  consider(complete(n));   // always meets the hypotheses: keeps the run non-vacuous
  consider(gstar);         // must be rejected by the isomorphism exclusion
  for (long i = 0; i < samples; ++i) {
    const double p = probs[static_cast<std::size_t>(i % 4)];
    std::mt19937_64 rng(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1))));
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
    consider(g);
  }

  r.add_param("hypothesis_met", std::to_string(hypothesis_met));
  r.add_param("excluded_isomorphic", std::to_string(excluded_iso));
  r.add_param("rejected", std::to_string(rejected));
  r.passed = r.violations.empty() && hypothesis_met >= 1;
  finalize(r, sw);
  return r;
}

// ---------------------------------------------------------------------------

VerificationReport verify_sharpness(int n) {
  if (n < 11) throw DomainError("sharpness check needs n >= 11");
  Stopwatch sw;
  VerificationReport r;
  r.campaign = "sharpness";
  r.add_param("n", std::to_string(n));

  const Graph g = build_Gstar(n);
  const std::string g6 = write_graph6(g);

  ++r.checked;
  if (!is_connected(g)) r.violations.push_back({g6, "G_* is not connected"});

  ++r.checked;
  const BindingResult b = binding_number(g);
  r.add_param("binding", b.value ? b.value->str() : "inf");
  r.add_param("binding_witness", b.witness.str());
  if (!b.value || *b.value != Rational(1))
    r.violations.push_back({g6, "binding number of G_* is not exactly 1"});

  ++r.checked;
  const DeficiencyResult d = lu_kano_deficiency(g);
  r.add_param("deficiency", std::to_string(d.max_deficiency));
  r.add_param("deficiency_witness", d.witness.str());
  if (d.max_deficiency != 2 || !(d.witness == VertexSet{0}))
    r.violations.push_back({g6, "expected criterion deficiency exactly 2 with witness {0}"});

  if (n <= kFactorSearchMaxOrder - 3) {  // even-assignment scan at 2^(n-1) stays sane to 13
    ++r.checked;
    std::string witness_bits;
    detail::for_each_even_assignment(n, [&](const HAssignment& h) {
      if (!find_h_factor(g, h)) {
        witness_bits = h.bits();
        return false;
      }
      return true;
    });
    if (witness_bits.empty()) {
      r.violations.push_back({g6, "no unrealizable even prescription found"});
    } else {
      r.add_param("unrealizable_h", witness_bits);
      // independent certificate: removing the hub must strand more odd
      // components than the hub's own degree budget can serve
      if (!parity_obstruction(g, HAssignment::from_bits(witness_bits), VertexSet{0}))
        r.violations.push_back({g6, "search said unrealizable but the parity certificate fails"});
    }
  } else {
    r.add_param("unrealizable_h", "skipped: order above factor-search cap");
  }

  r.passed = r.violations.empty();
  finalize(r, sw);
  return r;
}

}  // namespace rhobind
