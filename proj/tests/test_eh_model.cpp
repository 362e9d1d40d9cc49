// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "sarbeam/eh_model.hpp"
#include "sarbeam/rng.hpp"

using namespace sarbeam;

TEST_SUITE_BEGIN("eh_model");

TEST_CASE("forward curve fixed points") {
  RationalEhModel eh;
  CHECK(eh.forward(0.0) == 0.0);

  // direct evaluation at x = c
  const double a = 2.463, b = 1.635, c = 0.826;
  const double expected = (a * c + b) / (2.0 * c) - b / c;
  CHECK(eh.forward(c) == doctest::Approx(expected).epsilon(1e-14));

  CHECK(eh.saturation() == doctest::Approx(a - b / c).epsilon(1e-14));
  CHECK(eh.forward(1e9) < eh.saturation());
  CHECK(eh.forward(1e9) == doctest::Approx(eh.saturation()).epsilon(1e-8));
}

TEST_CASE("domain errors") {
  RationalEhModel eh;
  CHECK_THROWS_AS(eh.forward(-1e-9), std::domain_error);
  CHECK_THROWS_AS(eh.inverse(-1e-9), std::domain_error);
  CHECK_THROWS_AS(RationalEhModel(1.0, 2.0, 1.0), std::invalid_argument);  // a <= b/c
  CHECK_THROWS_AS(RationalEhModel(2.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("inverse fixed points and saturation") {
  RationalEhModel eh;
  CHECK(eh.inverse(0.0) == 0.0);
  CHECK_THROWS_AS(eh.inverse(0.48364), SaturationExceeded);  // above a - b/c = 0.483581...
  CHECK_THROWS_AS(eh.inverse(eh.saturation()), SaturationExceeded);
  try {
    eh.inverse(1.0);
    FAIL("expected SaturationExceeded");
  } catch (const SaturationExceeded& e) {
    CHECK(e.target_w == 1.0);
    CHECK(e.limit_w == doctest::Approx(eh.saturation()));
  }
}

TEST_CASE("inverse round-trip on a log grid") {
  RationalEhModel eh;
  for (double x : {1e-6, 1e-3, 0.1, 10.0}) {
    CHECK(std::abs(eh.inverse(eh.forward(x)) - x) <= 1e-9 * x);
  }
  for (int i = -9; i <= 3; ++i) {
    const double x = std::pow(10.0, i);
    CHECK(std::abs(eh.inverse(eh.forward(x)) - x) <= 1e-9 * x);
  }
}

TEST_CASE("strict monotonicity on a random grid") {
  RationalEhModel eh;
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const double x1 = std::pow(10.0, rng.uniform(-9.0, 3.0));
    const double x2 = x1 * (1.0 + rng.uniform(1e-6, 1.0));
    CHECK(eh.forward(x1) < eh.forward(x2));
  }
}

TEST_CASE("bounded above and locally linear near zero") {
  RationalEhModel eh;
  const double sat = eh.saturation();
  const double slope = sat / eh.c();
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const double x = std::pow(10.0, rng.uniform(-9.0, 4.0));
    const double f = eh.forward(x);
    CHECK(f <= sat);
    CHECK(f <= slope * x * (1.0 + 1e-12));
  }
  // finite-difference slope at the origin matches (a c - b)/c^2
  const double h = 1e-9;
  const double fd = (eh.forward(h) - eh.forward(0.0)) / h;
  CHECK(fd == doctest::Approx(slope).epsilon(1e-6));
}

TEST_SUITE_END();
