#pragma once

#include <optional>
#include <string>

#include "sensync/rule.hpp"
#include "sensync/schedule.hpp"

namespace sensync {

/// Exact sensitivity value |D| / |U|. All counts fit comfortably in 64
/// bits for every supported ring size (the cap keeps 3^n < 2^20).
struct SensitivityReport {
  int rule = 0;
  int n = 0;
  long long num_dynamics = 0;
  long long num_classes = 0;  // 3^n - 2^(n+1) + 2
  enum class Method { enumerated, closed_form } method = Method::enumerated;

  /// Numerator/denominator in lowest terms.
  std::pair<long long, long long> value() const;
  double value_float() const { return double(num_dynamics) / double(num_classes); }
};

enum class RuleClass { I, II, III, IV, max_sensitive };

std::string to_string(RuleClass c);

/// Number of distinct dynamics over all valid labelings, exact table
/// equality. OpenMP-parallel over the labeling sweep when available.
long long count_distinct_dynamics(LocalRule rule, int n);

/// Single-threaded reference for the same count; kept independent of the
/// parallel merge so the two can be benchmarked and cross-checked.
long long count_distinct_dynamics_serial(LocalRule rule, int n);

SensitivityReport sensitivity(LocalRule rule, int n);

/// Classification by orbit representative:
///   I  = {0, 51, 200, 204}      II = {3,12,15,34,60,136,170,28,32,44,140}
///   III = {8}                   IV = {128, 160, 162}
/// Everything else is max-sensitive (for n >= 7).
RuleClass classify(LocalRule rule, int n);

/// Smallest n for which the closed-form sensitivity of this rule is
/// proven, or nullopt if the rule (by representative) is not one of the
/// 19 covered rules. Class II rules (one-way and pattern-based alike) get
/// n > 3, rule 8 n >= 5, rule 162 n >= 3, rule 128 n > 6 and rule 160
/// n > 8.
std::optional<int> closed_form_threshold(LocalRule rule);

/// Closed-form report, refusing below the proven threshold rather than
/// extrapolating. nullopt when not covered.
std::optional<SensitivityReport> closed_form(LocalRule rule, int n);

/// Bisection of Lucas numbers L(2n): T(k) = 3T(k-1) - T(k-2), T(0)=2,
/// T(1)=3; the golden-ratio form phi^(2n) + phi^(-2n) equals it exactly.
long long lucas_bisection(int n);

}  // namespace sensync
