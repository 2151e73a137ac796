#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "widthkit/spaceform.hpp"

using namespace widthkit;
using namespace widthkit::spaceform;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("unit ball volumes and sphere areas in closed form") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(unit_ball_volume(2) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-12));
  CHECK(unit_ball_volume(4) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-12));
  CHECK(unit_ball_volume(5) == doctest::Approx(8.0 * kPi * kPi / 15.0).epsilon(1e-12));
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-12));
  CHECK(unit_sphere_area(4) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-12));
}

TEST_CASE("flat volumes reduce to the euclidean formula") {
  for (int d = 1; d <= 6; ++d) {
    for (const double r : {0.1, 1.0, 2.5}) {
      CHECK(ball_volume(d, 0.0, r) ==
            doctest::Approx(unit_ball_volume(d) * std::pow(r, d)).epsilon(1e-10));
    }
  }
}

TEST_CASE("curved three dimensional volumes match their antiderivatives") {
  // sigma = 6 means unit sectional curvature: V = 2 pi (r - sin r cos r).
  for (const double r : {0.3, 1.0, 2.0, 3.0}) {
    CHECK(ball_volume(3, 6.0, r) ==
          doctest::Approx(2.0 * kPi * (r - std::sin(r) * std::cos(r))).epsilon(1e-9));
  }
  // sigma = -6 means curvature -1: V = 2 pi (sinh r cosh r - r).
  for (const double r : {0.3, 1.0, 2.0}) {
    CHECK(ball_volume(3, -6.0, r) ==
          doctest::Approx(2.0 * kPi * (std::sinh(r) * std::cosh(r) - r)).epsilon(1e-9));
  }
  // Two dimensional checks: V = 2 pi (1 - cos r) and 2 pi (cosh r - 1).
  CHECK(ball_volume(2, 2.0, 1.0) == doctest::Approx(2.0 * kPi * (1.0 - std::cos(1.0))).epsilon(1e-9));
  CHECK(ball_volume(2, -2.0, 1.0) ==
        doctest::Approx(2.0 * kPi * (std::cosh(1.0) - 1.0)).epsilon(1e-9));
}

TEST_CASE("full round spheres") {
  // The complete round 3-sphere of curvature 1 has volume 2 pi^2.
  CHECK(ball_volume(3, 6.0, kPi) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-8));
  // The complete round 2-sphere: 4 pi.
  CHECK(ball_volume(2, 2.0, kPi) == doctest::Approx(4.0 * kPi).epsilon(1e-9));
}

TEST_CASE("domain validation") {
  CHECK(ball_volume(3, 0.0, 0.0) == 0.0);
  CHECK(ball_volume(1, 0.0, 0.7) == doctest::Approx(1.4));
  CHECK_THROWS_AS(ball_volume(3, 0.0, -0.1), RadiusOutOfRange);
  CHECK_THROWS_AS(ball_volume(3, 6.0, 3.2), RadiusOutOfRange);  // beyond pi
  CHECK_THROWS_AS(ball_volume(0, 0.0, 1.0), Error);
  CHECK_THROWS_AS(ball_volume(1, 6.0, 1.0), Error);  // curved lines unsupported
  // Radius exactly at the diameter bound is fine.
  CHECK(ball_volume(3, 6.0, kPi) > 0.0);
}

TEST_CASE("volume decreases strictly in the curvature") {
  double prev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double sigma = -20.0 + 40.0 * i / 49.0;
    const double v = ball_volume(4, sigma, 1.2);
    if (i > 0) CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("small radius expansion") {
  // V / (omega_d r^d) = 1 - sigma r^2 / (6(d+2)) + O(r^4).
  const double r = 1e-2;
  for (int d = 2; d <= 5; ++d) {
    for (const double sigma : {-6.0, 0.0, 6.0}) {
      const double lead = ball_volume(d, sigma, r) / (unit_ball_volume(d) * std::pow(r, d));
      const double predicted = 1.0 - sigma * r * r / (6.0 * (d + 2));
      CHECK(std::fabs(lead - predicted) <= r * r * r);
    }
  }
}

TEST_CASE("curvature recovery inverts the volume map") {
  for (int d = 2; d <= 5; ++d) {
    for (const double sigma : {-6.0, -1.0, 0.0, 1.0, 6.0}) {
      for (const double r : {0.8, 1.0, 1.25}) {
        const double vol = ball_volume(d, sigma, r);
        CHECK(std::fabs(mscal_from_volume(d, vol, r) - sigma) <= 1e-6);
      }
    }
  }
}

TEST_CASE("curvature recovery rejects impossible volumes") {
  CHECK_THROWS_AS(mscal_from_volume(3, 1e-300, 1.0), BracketExhausted);
  CHECK_THROWS_AS(mscal_from_volume(3, 0.0, 1.0), Error);
  CHECK_THROWS_AS(mscal_from_volume(1, 1.0, 1.0), Error);
  CHECK_THROWS_AS(mscal_from_volume(3, 1.0, -1.0), Error);
}

TEST_CASE("scaling law pairs agree") {
  const double vol = ball_volume(3, 2.0, 1.0);
  for (const double lambda : {0.5, 2.0, 3.0}) {
    const auto [scaled, direct] = mscal_scaling_pair(3, vol, 1.0, lambda);
    CHECK(std::fabs(scaled - direct) <= 1e-6);
  }
}

TEST_CASE("fiber radius bound and its certificate") {
  for (const int d : {2, 3, 4}) {
    for (const double sigma : {0.5, 2.0, 8.0}) {
      for (const double kappa : {0.0, 1.0, 10.0}) {
        const double rho = fiber_radius_bound(d, sigma, kappa);
        CHECK(rho > 0.0);
        CHECK(rho < 0.5);
        CHECK(mscal_certificate(d, sigma, kappa, rho));
      }
    }
  }
  // Shaving margin is necessary: the raw threshold fails the strict
  // inequality when the volume ratio is the binding constraint.
  const double top = ball_volume(4, 2.0, 1.0);
  const double base = ball_volume(3, -10.0, 1.0);
  REQUIRE(top < base);
  CHECK(!mscal_certificate(3, 2.0, 10.0, 0.5 * top / base));

  CHECK_THROWS_AS(fiber_radius_bound(3, 0.0, 1.0), Error);
  CHECK_THROWS_AS(fiber_radius_bound(3, -1.0, 1.0), Error);
  CHECK_THROWS_AS(fiber_radius_bound(3, 1.0, -1.0), Error);
  CHECK_THROWS_AS(fiber_radius_bound(1, 1.0, 1.0), Error);
}
