#include <doctest.h>

#include <stdexcept>

#include "sensync/topology.hpp"

using namespace sensync;

TEST_CASE("rules without neighbor influence have no arcs") {
  for (int w : {0, 51, 204}) {
    const auto ea = effective_arcs(LocalRule{std::uint8_t(w)}, 5);
    CHECK_FALSE(ea.clockwise);
    CHECK_FALSE(ea.counterclockwise);
    CHECK(ea.count() == 0);
    CHECK(ea.arcs().empty());
  }
}

TEST_CASE("one-way rules") {
  // h = x3: each cell reads its right neighbor, so i+1 influences i.
  const auto shift = effective_arcs(LocalRule{170}, 6);
  CHECK_FALSE(shift.clockwise);
  CHECK(shift.counterclockwise);
  CHECK(shift.count() == 6);

  // h = x1: the mirror image.
  const auto mirror = effective_arcs(LocalRule{240}, 6);
  CHECK(mirror.clockwise);
  CHECK_FALSE(mirror.counterclockwise);

  // the rest of the one-way family is one-way too
  for (int w : {3, 12, 15, 34, 60, 136}) {
    const auto ea = effective_arcs(LocalRule{std::uint8_t(w)}, 5);
    CHECK(int(ea.clockwise) + int(ea.counterclockwise) == 1);
  }
}

TEST_CASE("two-way rules have all 2n arcs") {
  for (int w : {128, 160, 162, 200, 110, 30}) {
    const auto ea = effective_arcs(LocalRule{std::uint8_t(w)}, 7);
    CHECK(ea.clockwise);
    CHECK(ea.counterclockwise);
    CHECK(ea.count() == 14);
  }
}

TEST_CASE("arc lists enumerate the ring") {
  const auto ea = effective_arcs(LocalRule{128}, 3);
  const std::vector<std::pair<int, int>> want{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}, {0, 2}};
  CHECK(ea.arcs() == want);
}

TEST_CASE("rings smaller than 3 are rejected") {
  CHECK_THROWS_AS(effective_arcs(LocalRule{128}, 2), std::invalid_argument);
}
