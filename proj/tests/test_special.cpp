#include <doctest.h>

#include <set>

#include "sensync/dynamics.hpp"
#include "sensync/special.hpp"

using namespace sensync;

TEST_CASE("rule 162 pairs differ on a single clockwise arc") {
  const auto res = find_special_pairs(LocalRule{162}, 6);
  CHECK(res.pairs.size() == 6);
  CHECK(res.pairwise());
  CHECK(pairs_disjoint(res));
  CHECK(verify_closure(res, LocalRule{162}));
  for (const auto& p : res.pairs) {
    REQUIRE(p.differing_arcs.size() == 1);
    const auto [from, to] = p.differing_arcs[0];
    CHECK(to == (from + 1) % 6);  // a clockwise arc (i, i+1)
    // ... and the pair really does share one dynamics
    CHECK(dynamics_map(LocalRule{162}, p.lab_a).images ==
          dynamics_map(LocalRule{162}, p.lab_b).images);
    CHECK(p.lab_a != p.lab_b);
    CHECK(is_valid(p.lab_a));
    CHECK(is_valid(p.lab_b));
  }
  // one pair per ring position
  std::set<int> positions;
  for (const auto& p : res.pairs) positions.insert(p.differing_arcs[0].first);
  CHECK(positions.size() == 6);
}

TEST_CASE("rule 128 pairs at n=7") {
  const auto res = find_special_pairs(LocalRule{128}, 7);
  CHECK(res.pairs.size() == 70);
  CHECK(res.pairwise());
  CHECK(pairs_disjoint(res));
  CHECK(verify_closure(res, LocalRule{128}));
  for (const auto& p : res.pairs) CHECK(p.differing_arcs.size() == 1);
}

TEST_CASE("histograms degenerate for insensitive rules") {
  const auto res = find_special_pairs(LocalRule{204}, 5);
  CHECK_FALSE(res.pairwise());
  // one dynamics class holding all 181 labelings
  REQUIRE(res.class_size_histogram.size() == 1);
  CHECK(res.class_size_histogram.begin()->first == 181);
  CHECK(res.class_size_histogram.begin()->second == 1);
  CHECK(res.pairs.empty());
}

TEST_CASE("pattern count for the remaining class II rules") {
  for (int w : {28, 32, 44, 140})
    for (int n = 4; n <= 6; ++n)
      CHECK(count_pattern_dynamics_class2(LocalRule{std::uint8_t(w)}, n) == (1LL << n) - 1);
  CHECK_THROWS_AS(count_pattern_dynamics_class2(LocalRule{170}, 5), std::invalid_argument);
  CHECK_THROWS_AS(count_pattern_dynamics_class2(LocalRule{32}, 3), std::invalid_argument);
}

TEST_CASE("JSON export carries the pairs") {
  const auto res = find_special_pairs(LocalRule{162}, 5);
  const auto j = pairs_to_json(res);
  CHECK(j.at("rule") == 162);
  CHECK(j.at("n") == 5);
  CHECK(j.at("pair_count") == 5);
  REQUIRE(j.at("pairs").size() == 5);
  const auto& first = j.at("pairs").at(0);
  const auto a = ArcLabeling::from_hex(first.at("labeling_a").get<std::string>());
  CHECK(a.n == 5);
  CHECK(is_valid(a));
}
