#include "sensync/special.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sensync/dynamics.hpp"

namespace sensync {

namespace {

std::vector<std::pair<int, int>> differing_arcs(const ArcLabeling& a, const ArcLabeling& b) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < a.n; ++i) {
    const int j = (i + 1) % a.n;
    if (a.cw_minus(i) != b.cw_minus(i)) arcs.emplace_back(i, j);
    if (a.ccw_minus(i) != b.ccw_minus(i)) arcs.emplace_back(j, i);
  }
  return arcs;
}

}  // namespace

bool SpecialPairsResult::pairwise() const {
  for (const auto& [size, count] : class_size_histogram)
    if (size > 2) return false;
  return true;
}

SpecialPairsResult find_special_pairs(LocalRule rule, int n) {
  const auto labelings = enumerate_valid_labelings(n);
  std::vector<std::string> keys(labelings.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long long k = 0; k < (long long)labelings.size(); ++k)
    keys[k] = dynamics_map(rule, labelings[k]).key();

  std::unordered_map<std::string, std::vector<std::size_t>> groups;
  groups.reserve(labelings.size());
  for (std::size_t k = 0; k < labelings.size(); ++k) groups[keys[k]].push_back(k);

  SpecialPairsResult result;
  result.rule = rule.wolfram;
  result.n = n;
  for (const auto& [key, members] : groups) {
    ++result.class_size_histogram[members.size()];
    if (members.size() == 2) {
      const auto& a = labelings[members[0]];
      const auto& b = labelings[members[1]];
      result.pairs.push_back({a, b, rule.wolfram, differing_arcs(a, b)});
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const SpecialPair& p, const SpecialPair& q) {
              return std::min(p.lab_a, p.lab_b) < std::min(q.lab_a, q.lab_b);
            });
  return result;
}

bool verify_closure(const SpecialPairsResult& result, LocalRule rule) {
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  const auto pair_key = [](const ArcLabeling& a, const ArcLabeling& b) {
    return Key{std::min(a.bits, b.bits), std::max(a.bits, b.bits)};
  };
  std::set<Key> keys;
  for (const auto& p : result.pairs) keys.insert(pair_key(p.lab_a, p.lab_b));
  for (const auto& p : result.pairs) {
    if (!keys.count(pair_key(p.lab_a.rotated(), p.lab_b.rotated()))) return false;
    if (rule.left_right_symmetric() &&
        !keys.count(pair_key(p.lab_a.mirrored(), p.lab_b.mirrored())))
      return false;
  }
  return true;
}

bool pairs_disjoint(const SpecialPairsResult& result) {
  std::set<std::uint32_t> seen;
  for (const auto& p : result.pairs)
    if (!seen.insert(p.lab_a.bits).second || !seen.insert(p.lab_b.bits).second) return false;
  return true;
}

long long count_pattern_dynamics_class2(LocalRule rule, int n) {
  const int w = rule.wolfram;
  if (w != 28 && w != 32 && w != 44 && w != 140)
    throw std::invalid_argument("count_pattern_dynamics_class2: rule not in {28,32,44,140}");
  if (n <= 3) throw std::invalid_argument("count_pattern_dynamics_class2: requires n > 3");
  return (1LL << n) - 1;
}

nlohmann::json pairs_to_json(const SpecialPairsResult& result) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["rule"] = result.rule;
  j["n"] = result.n;
  j["pair_count"] = result.pairs.size();
  j["pairs"] = nlohmann::json::array();
  for (const auto& p : result.pairs) {
    nlohmann::json arcs = nlohmann::json::array();
    for (auto [from, to] : p.differing_arcs) arcs.push_back({from, to});
    j["pairs"].push_back({{"labeling_a", p.lab_a.to_hex()},
                          {"labeling_b", p.lab_b.to_hex()},
                          {"differing_arcs", arcs}});
  }
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [size, count] : result.class_size_histogram)
    hist[std::to_string(size)] = count;
  j["class_size_histogram"] = hist;
  return j;
}

}  // namespace sensync
