#include <doctest.h>

#include <cmath>
#include <vector>

#include "desurv/ballistic_limit.hpp"
#include "desurv/error.hpp"
#include "desurv/material.hpp"

using namespace desurv;

namespace {

WallLayer wall(const char* mat, double t, double spacing = 0.0) { return {material_by_name(mat), t, spacing}; }

double bisect(const BallisticLimit& ble, const Impact& imp, std::span<const WallLayer> shields, const WallLayer& target) {
  double lo = 1e-9, hi = 1.0;
  REQUIRE_FALSE(ble.perforates(lo, imp, shields, target));
  REQUIRE(ble.perforates(hi, imp, shields, target));
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    (ble.perforates(mid, imp, shields, target) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

TEST_SUITE("ballistic-limit") {
  TEST_CASE("bisection over the perforation predicate") {
    const PowerLawBle ble;
    const WallLayer al = wall("Al-6061-T6", 1e-3);
    const Impact imp{10e3, 0.0};
    const double dc = ble.critical_diameter(imp, {}, al);
    CHECK(dc > 0.0);
    CHECK(bisect(ble, imp, {}, al) == doctest::Approx(dc).epsilon(1e-9));

    const WallLayer bumper = wall("Al-6061-T6", 2e-3, 0.1);
    const WallLayer stack[] = {bumper};
    for (double v : {1500.0, 5000.0, 12000.0}) {
      const Impact oblique{v, 0.5};
      CHECK(bisect(ble, oblique, stack, al) == doctest::Approx(ble.critical_diameter(oblique, stack, al)).epsilon(1e-9));
    }
  }

  TEST_CASE("thicker walls stop larger particles") {
    const PowerLawBle ble;
    const WallLayer bumper = wall("Al-6061-T6", 2e-3, 0.2);
    const WallLayer stack[] = {bumper};
    for (double v : {1000.0, 4000.0, 9000.0, 15000.0}) {
      const Impact imp{v, 0.3};
      double prev = 0.0;
      for (double t = 0.5e-3; t < 1e-2; t *= 2.0) {
        const double single = ble.critical_diameter(imp, {}, wall("A316", t));
        const double shielded = ble.critical_diameter(imp, stack, wall("A316", t));
        CHECK(shielded > prev);
        CHECK(single > 0.0);
        prev = shielded;
      }
    }
  }

  TEST_CASE("faster particles need not be larger") {
    const PowerLawBle ble;
    const WallLayer bumper = wall("Al-6061-T6", 1e-3, 0.1);
    const WallLayer stack[] = {bumper};
    double prev = 1e9;
    for (double v = 7000.0; v < 20000.0; v += 500.0) {
      const double dc = ble.critical_diameter({v, 0.2}, stack, wall("Ti-6Al-4V", 2e-3));
      CHECK(dc <= prev);
      prev = dc;
    }
  }

  TEST_CASE("stronger and denser walls raise the limit") {
    const PowerLawBle ble;
    const Impact imp{10e3, 0.0};
    CHECK(ble.critical_diameter(imp, {}, wall("A316", 2e-3)) > ble.critical_diameter(imp, {}, wall("Al-6061-T6", 2e-3)));
    CHECK(material_factor(material_by_name("Al-6061-T6")) == doctest::Approx(1.0));
  }

  TEST_CASE("more than three layers") {
    const PowerLawBle ble;
    const std::vector<WallLayer> shields(3, wall("Al-6061-T6", 1e-3, 0.05));
    CHECK_THROWS_AS(ble.critical_diameter({8000.0, 0.0}, shields, wall("Al-6061-T6", 1e-3)), Error);
    CHECK_NOTHROW(ble.critical_diameter({8000.0, 0.0}, std::span(shields).first(2), wall("Al-6061-T6", 1e-3)));
  }

  TEST_CASE("coefficient file") {
    const PowerLawCoefficients c = parse_ble_coefficients(
        "branch,coefficient,thickness_exponent,velocity_exponent,spacing_exponent\n"
        "ballistic,50,1,-0.5,0\n"
        "hypervelocity,300,0.5,-0.6,0.25\n");
    CHECK(c.ballistic.coefficient == 50.0);
    CHECK(c.ballistic.velocity_exponent == -0.5);
    CHECK(c.hypervelocity.thickness_exponent == 0.5);
    CHECK(c.hypervelocity.spacing_exponent == 0.25);
    const PowerLawCoefficients bundled = read_ble_coefficients(DESURV_DATA_DIR "/ble/power_law.csv");
    const PowerLawCoefficients defaults;
    CHECK(bundled.ballistic.coefficient == defaults.ballistic.coefficient);
    CHECK(bundled.hypervelocity.coefficient == defaults.hypervelocity.coefficient);
    CHECK_THROWS_AS(parse_ble_coefficients("branch,coefficient\nwhipple,3\n"), Error);
    // Exponents that break monotonicity are rejected.
    CHECK_THROWS_AS(parse_ble_coefficients("branch,coefficient,thickness_exponent\nballistic,50,-1\n"), Error);
  }
}
