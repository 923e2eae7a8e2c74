#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "sensync/sensitivity.hpp"

using namespace sensync;

TEST_CASE("Lucas bisection recurrence") {
  CHECK(lucas_bisection(1) == 3);
  CHECK(lucas_bisection(2) == 7);
  CHECK(lucas_bisection(3) == 18);
  CHECK(lucas_bisection(4) == 47);
  CHECK(lucas_bisection(5) == 123);
  CHECK(lucas_bisection(10) == 15127);
  CHECK_THROWS_AS(lucas_bisection(0), std::invalid_argument);
}

TEST_CASE("distinct dynamics counts on small sizes") {
  CHECK(count_distinct_dynamics(LocalRule{0}, 5) == 1);
  CHECK(count_distinct_dynamics(LocalRule{204}, 6) == 1);
  CHECK(count_distinct_dynamics(LocalRule{170}, 4) == 15);  // 2^4 - 1
  CHECK(count_distinct_dynamics(LocalRule{8}, 5) == 91);    // L(10) - 2^5
}

TEST_CASE("parallel and serial counters agree") {
  for (int n = 4; n <= 6; ++n)
    for (int w : {8, 110, 128, 162, 170})
      CHECK(count_distinct_dynamics(LocalRule{std::uint8_t(w)}, n) ==
            count_distinct_dynamics_serial(LocalRule{std::uint8_t(w)}, n));
}

TEST_CASE("sensitivity values are reduced fractions") {
  const auto rep = sensitivity(LocalRule{170}, 4);
  CHECK(rep.num_dynamics == 15);
  CHECK(rep.num_classes == 51);
  CHECK(rep.value() == std::pair<long long, long long>{5, 17});
  CHECK(rep.value_float() == doctest::Approx(15.0 / 51.0));

  const auto one = sensitivity(LocalRule{204}, 5);
  CHECK(one.value() == std::pair<long long, long long>{1, 181});
}

TEST_CASE("classification by orbit representative") {
  CHECK(classify(LocalRule{0}, 7) == RuleClass::I);
  CHECK(classify(LocalRule{255}, 7) == RuleClass::I);   // orbit of 0
  CHECK(classify(LocalRule{200}, 7) == RuleClass::I);
  CHECK(classify(LocalRule{170}, 7) == RuleClass::II);
  CHECK(classify(LocalRule{240}, 7) == RuleClass::II);  // orbit of 170
  CHECK(classify(LocalRule{32}, 7) == RuleClass::II);
  CHECK(classify(LocalRule{8}, 7) == RuleClass::III);
  CHECK(classify(LocalRule{128}, 7) == RuleClass::IV);
  CHECK(classify(LocalRule{162}, 7) == RuleClass::IV);
  CHECK(classify(LocalRule{160}, 7) == RuleClass::IV);
  CHECK(classify(LocalRule{110}, 7) == RuleClass::max_sensitive);
  CHECK(classify(LocalRule{30}, 7) == RuleClass::max_sensitive);
  CHECK(to_string(RuleClass::III) == "III");
}

TEST_CASE("closed forms respect their proven thresholds") {
  CHECK(closed_form_threshold(LocalRule{0}) == 1);
  CHECK(closed_form_threshold(LocalRule{170}) == 4);
  CHECK(closed_form_threshold(LocalRule{44}) == 4);
  CHECK(closed_form_threshold(LocalRule{8}) == 5);
  CHECK(closed_form_threshold(LocalRule{162}) == 3);
  CHECK(closed_form_threshold(LocalRule{128}) == 7);
  CHECK(closed_form_threshold(LocalRule{160}) == 9);
  CHECK_FALSE(closed_form_threshold(LocalRule{110}).has_value());

  CHECK_FALSE(closed_form(LocalRule{128}, 6).has_value());
  CHECK_FALSE(closed_form(LocalRule{110}, 8).has_value());
}

TEST_CASE("closed-form values for the bounded classes") {
  const auto r128 = closed_form(LocalRule{128}, 7);
  REQUIRE(r128.has_value());
  CHECK(r128->num_dynamics == 1933 - 70);
  CHECK(r128->num_classes == 1933);

  const auto r162 = closed_form(LocalRule{162}, 5);
  REQUIRE(r162.has_value());
  CHECK(r162->num_dynamics == 181 - 5);

  const auto r160 = closed_form(LocalRule{160}, 9);
  REQUIRE(r160.has_value());
  CHECK(r160->num_dynamics == 18661 - 108);

  const auto r8 = closed_form(LocalRule{8}, 6);
  REQUIRE(r8.has_value());
  CHECK(r8->num_dynamics == lucas_bisection(6) - 64);
}

TEST_CASE("closed form matches enumeration where both apply") {
  for (int w : {0, 51, 200, 204, 3, 170, 32, 8, 162, 128}) {
    const LocalRule rule{std::uint8_t(w)};
    const int lo = std::max(4, *closed_form_threshold(rule));
    for (int n = lo; n <= 7; ++n) {
      const auto cf = closed_form(rule, n);
      REQUIRE(cf.has_value());
      CHECK(cf->num_dynamics == count_distinct_dynamics(rule, n));
    }
  }
}
