#pragma once

#include <string>
#include <vector>

#include "sensync/rule.hpp"
#include "sensync/sensitivity.hpp"

namespace sensync {

/// One line of the scan grid (one rule at one ring size).
struct ScanRow {
  int rule = 0;
  int n = 0;
  long long num_dynamics = 0;
  long long num_classes = 0;
  long long sensitivity_num = 0;  // lowest terms
  long long sensitivity_den = 0;
  double sensitivity_float = 0.0;
  std::string rule_class;
  std::string closed_form_match;  // yes | no | not_covered
};

/// Rule-set spec: "all", "reps88", "nonmax19", "table1:<I|II|III|IV>",
/// or a comma list of Wolfram numbers. Throws std::invalid_argument on
/// anything else. Result is sorted and deduplicated.
std::vector<int> parse_rule_spec(const std::string& spec);

/// Scan every (rule, n) pair, rule ascending then n ascending.
std::vector<ScanRow> scan(const std::vector<int>& rules, int n_lo, int n_hi);

/// CSV with the fixed header, 6-decimal floats, LF endings; byte-stable
/// for identical inputs.
std::string render_csv(const std::vector<ScanRow>& rows);
std::string render_json(const std::vector<ScanRow>& rows);

/// One verification check, for per-check reporting.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // expected vs actual on failure
};

/// Suites: counts, table1, lucas, special, oracle, all.
/// Throws std::invalid_argument on an unknown suite name.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

}  // namespace sensync
