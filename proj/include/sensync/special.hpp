#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "sensync/rule.hpp"
#include "sensync/schedule.hpp"

namespace sensync {

/// Two non-equivalent schedules (distinct valid labelings) inducing the
/// same dynamics for a rule.
struct SpecialPair {
  ArcLabeling lab_a;
  ArcLabeling lab_b;
  int rule = 0;
  /// Arcs (from, to) on which the two labelings differ.
  std::vector<std::pair<int, int>> differing_arcs;
};

/// Same-dynamics grouping of all valid labelings. When every dynamics
/// class has at most two labelings (rules 128/160/162 in their theorem
/// ranges) the grouping is literally a set of pairs; rules with fewer
/// dynamics (e.g. the identity) collapse many labelings into one class,
/// so only a class-size histogram is meaningful there.
struct SpecialPairsResult {
  int rule = 0;
  int n = 0;
  /// Pairs from dynamics classes of exactly two labelings.
  std::vector<SpecialPair> pairs;
  /// class size -> number of dynamics classes of that size.
  std::map<std::size_t, long long> class_size_histogram;

  /// True iff no dynamics class holds more than two labelings.
  bool pairwise() const;
};

/// Groups labelings by exact dynamics key (one parallel sweep, never a
/// pairwise comparison), then extracts the size-2 classes as pairs.
SpecialPairsResult find_special_pairs(LocalRule rule, int n);

/// True iff the pair set is closed under left rotation, and, when the
/// rule is left/right symmetric, under left/right exchange too.
bool verify_closure(const SpecialPairsResult& pairs, LocalRule rule);

/// No labeling occurs in two pairs. Always true by construction here
/// (pairs come from disjoint dynamics classes); exposed for the report.
bool pairs_disjoint(const SpecialPairsResult& pairs);

/// Pattern-theoretic distinct-dynamics count 2^n - 1 for the class II
/// rules 28, 32, 44, 140 (proven for n > 3). Throws std::invalid_argument
/// outside that rule set or range.
long long count_pattern_dynamics_class2(LocalRule rule, int n);

/// JSON export: hex-encoded labelings, differing arcs, rule and n.
nlohmann::json pairs_to_json(const SpecialPairsResult& result);

}  // namespace sensync
