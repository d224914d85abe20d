#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rhobind {

struct Violation {
  std::string graph6;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

/// Outcome of one verification campaign. Parameters keep insertion order;
/// violations are sorted, so a report is a deterministic function of its
/// inputs (runtime_s aside, which can be redacted for byte-stable output).
struct VerificationReport {
  std::string campaign;
  std::string version;
  std::vector<std::pair<std::string, std::string>> parameters;
  long checked = 0;
  std::vector<Violation> violations;
  double runtime_s = 0.0;
  bool passed = false;

  void add_param(const std::string& key, const std::string& value);
  const std::string* param(const std::string& key) const;

  /// Order violations by (graph6, detail); campaigns call this before
  /// returning so reports never depend on discovery order.
  void sort_violations();

  std::string json_str(bool redact_runtime = false) const;
  std::string csv_str(bool redact_runtime = false) const;
};

/// Cross-check the component-count criterion against a direct search over
/// every even prescription, on every connected graph of order <= n_max (<= 7).
VerificationReport verify_theorem11(int n_max);

/// Scan the whole clique-join family at order n (>= 11): every member must
/// sit spectrally below G_* by a clear margin unless it is G_* itself.
/// `extended` also scans joins with up to two extra parts.
VerificationReport verify_theorem12_family(int n, bool extended = false);

/// Randomized hunt for a counterexample at order n in [11, 13]: dense-biased
/// samples plus injected K_n and G_*; any graph meeting the spectral and
/// binding hypotheses must satisfy the factor criterion.
VerificationReport search_counterexample(int n, long samples, std::uint64_t seed);

/// Check that G_*(n) itself is the sharp boundary case: 1-binding, criterion
/// deficiency exactly 2 at the hub, and (n <= 13) an explicit unrealizable
/// even prescription certified by a parity obstruction.
VerificationReport verify_sharpness(int n);

}  // namespace rhobind
