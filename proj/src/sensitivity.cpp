#include "sensync/sensitivity.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "sensync/dynamics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sensync {

std::pair<long long, long long> SensitivityReport::value() const {
  const long long g = std::gcd(num_dynamics, num_classes);
  return {num_dynamics / g, num_classes / g};
}

std::string to_string(RuleClass c) {
  switch (c) {
    case RuleClass::I: return "I";
    case RuleClass::II: return "II";
    case RuleClass::III: return "III";
    case RuleClass::IV: return "IV";
    case RuleClass::max_sensitive: return "max_sensitive";
  }
  return "?";
}

long long count_distinct_dynamics_serial(LocalRule rule, int n) {
  const auto labelings = enumerate_valid_labelings(n);
  std::unordered_set<std::string> keys;
  keys.reserve(labelings.size());
  for (const auto& lab : labelings) keys.insert(dynamics_map(rule, lab).key());
  return (long long)keys.size();
}

long long count_distinct_dynamics(LocalRule rule, int n) {
#ifndef _OPENMP
  return count_distinct_dynamics_serial(rule, n);
#else
  const auto labelings = enumerate_valid_labelings(n);
  std::unordered_set<std::string> keys;
  keys.reserve(labelings.size());
#pragma omp parallel
  {
    std::unordered_set<std::string> local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long long k = 0; k < (long long)labelings.size(); ++k)
      local.insert(dynamics_map(rule, labelings[k]).key());
    // Set union is associative and commutative, so merge order between
    // threads does not matter.
#pragma omp critical(sensync_dyn_merge)
    keys.merge(local);
  }
  return (long long)keys.size();
#endif
}

SensitivityReport sensitivity(LocalRule rule, int n) {
  SensitivityReport r;
  r.rule = rule.wolfram;
  r.n = n;
  r.num_dynamics = count_distinct_dynamics(rule, n);
  r.num_classes = valid_labeling_count(n);
  r.method = SensitivityReport::Method::enumerated;
  return r;
}

namespace {

constexpr int kClassI[] = {0, 51, 200, 204};
constexpr int kClassIIOneWay[] = {3, 12, 15, 34, 60, 136, 170};
constexpr int kClassIIPattern[] = {28, 32, 44, 140};
constexpr int kClassIV[] = {128, 160, 162};

bool contains(const auto& set, int v) {
  for (int s : set)
    if (s == v) return true;
  return false;
}

}  // namespace

RuleClass classify(LocalRule rule, int /*n*/) {
  const int rep = class_representative(rule);
  if (contains(kClassI, rep)) return RuleClass::I;
  if (contains(kClassIIOneWay, rep) || contains(kClassIIPattern, rep)) return RuleClass::II;
  if (rep == 8) return RuleClass::III;
  if (contains(kClassIV, rep)) return RuleClass::IV;
  return RuleClass::max_sensitive;
}

std::optional<int> closed_form_threshold(LocalRule rule) {
  const int rep = class_representative(rule);
  if (contains(kClassI, rep)) return 1;
  // the 2^n - 1 count can fall short below n=4 (rule 12 gives 4 at n=3)
  if (contains(kClassIIOneWay, rep)) return 4;
  if (contains(kClassIIPattern, rep)) return 4;
  if (rep == 8) return 5;
  if (rep == 162) return 3;
  if (rep == 128) return 7;
  if (rep == 160) return 9;
  return std::nullopt;
}

long long lucas_bisection(int n) {
  if (n < 1) throw std::invalid_argument("lucas_bisection: n must be >= 1");
  long long a = 2, b = 3;  // T(0), T(1)
  for (int k = 1; k < n; ++k) {
    const long long next = 3 * b - a;
    a = b;
    b = next;
  }
  return b;
}

std::optional<SensitivityReport> closed_form(LocalRule rule, int n) {
  const auto threshold = closed_form_threshold(rule);
  if (!threshold || n < *threshold) return std::nullopt;
  const int rep = class_representative(rule);
  SensitivityReport r;
  r.rule = rule.wolfram;
  r.n = n;
  r.num_classes = valid_labeling_count(n);
  r.method = SensitivityReport::Method::closed_form;
  if (contains(kClassI, rep)) {
    r.num_dynamics = 1;
  } else if (contains(kClassIIOneWay, rep) || contains(kClassIIPattern, rep)) {
    r.num_dynamics = (1LL << n) - 1;
  } else if (rep == 8) {
    r.num_dynamics = lucas_bisection(n) - (1LL << n);
  } else {
    const long long c = rep == 128 ? 10 : rep == 160 ? 12 : 1;
    r.num_dynamics = r.num_classes - c * n;
  }
  return r;
}

}  // namespace sensync
