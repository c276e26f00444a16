#include <doctest.h>

#include <cmath>
#include <numbers>

#include "desurv/environment.hpp"
#include "desurv/error.hpp"

using namespace desurv;

TEST_SUITE("environment") {
  TEST_CASE("sea level") {
    const AtmosphereSample a = atmosphere_at(0.0);
    CHECK(a.density == doctest::Approx(1.225).epsilon(1e-4));
    CHECK(a.temperature == doctest::Approx(288.15).epsilon(1e-6));
    CHECK(a.pressure == doctest::Approx(101325.0).epsilon(1e-4));
    CHECK(a.speed_of_sound == doctest::Approx(340.29).epsilon(1e-3));
  }

  TEST_CASE("published table values") {
    struct Row {
      double h, rho;
    };
    // Geometric altitude (m) and density (kg/m^3) from the standard's tables.
    const Row rows[] = {{11e3, 3.6480e-1}, {50e3, 1.0269e-3}, {80e3, 1.846e-5}, {100e3, 5.604e-7},
                        {150e3, 2.076e-9}, {200e3, 2.541e-10}, {300e3, 1.916e-11}, {500e3, 5.215e-13},
                        {800e3, 1.170e-14}, {1000e3, 3.561e-15}};
    for (const Row& r : rows) {
      CAPTURE(r.h);
      CHECK(atmosphere_at(r.h).density == doctest::Approx(r.rho).epsilon(0.02));
    }
  }

  TEST_CASE("altitude bounds") {
    CHECK_THROWS_AS(atmosphere_at(1'000'001.0), Error);
    CHECK_THROWS_AS(atmosphere_at(-1.0), Error);
    CHECK_NOTHROW(atmosphere_at(1'000'000.0));
  }

  TEST_CASE("density is positive and non-increasing") {
    double prev = atmosphere_at(0.0).density;
    for (double h = 250.0; h <= 1e6; h += 250.0) {
      const AtmosphereSample a = atmosphere_at(h);
      CAPTURE(h);
      CHECK(a.density > 0.0);
      CHECK(a.density <= prev);
      CHECK(a.temperature > 0.0);
      CHECK(a.pressure >= 0.0);
      CHECK(a.mean_free_path >= 0.0);
      prev = a.density;
    }
  }

  TEST_CASE("model variants") {
    CHECK(AtmosphereModel::vacuum().sample(100e3).density == 0.0);
    CHECK(AtmosphereModel::standard().sample(2e6).density == 0.0);
    CHECK(AtmosphereModel::standard().sample(-5.0).density == doctest::Approx(1.225).epsilon(1e-4));
    const AtmosphereModel t = AtmosphereModel::from_rows({{0.0, 1.0}, {1000.0, 0.1}}, {300.0, 250.0});
    CHECK(t.sample(500.0).density == doctest::Approx(std::sqrt(0.1)).epsilon(1e-9));
    CHECK(t.sample(5000.0).density == doctest::Approx(0.1));
  }

  TEST_CASE("spherical gravity") {
    const GravityConstants c = GravityConstants::spherical_nonrotating();
    for (double lat : {-1.2, 0.0, 0.4, 1.5}) {
      const GravityVector g = gravity_at(c.earth_radius, lat, c);
      CHECK(g.radial == doctest::Approx(-c.mu / (c.earth_radius * c.earth_radius)));
      CHECK(g.polar == 0.0);
    }
    CHECK(gravity_at(c.earth_radius, 0.0, c).radial == doctest::Approx(-9.82).epsilon(2e-3));
  }

  TEST_CASE("equator and poles") {
    const GravityConstants c;
    const double r = c.earth_radius + 400e3;
    CHECK(gravity_at(r, 0.0, c).polar == 0.0);
    CHECK(gravity_at(r, std::numbers::pi / 2.0, c).polar == 0.0);
    CHECK(gravity_at(r, -std::numbers::pi / 2.0, c).polar == 0.0);
    // With only J3 active, the radial term at the equator equals the point mass value.
    GravityConstants j3 = c;
    j3.j2 = j3.j4 = 0.0;
    CHECK(gravity_at(r, 0.0, j3).radial == doctest::Approx(-c.mu / (r * r)).epsilon(1e-15));
  }

  TEST_CASE("zonal terms at 45 degrees match a Legendre form") {
    const GravityConstants c;
    const long double r = c.earth_radius + 400e3L;
    const long double lat = std::numbers::pi_v<long double> / 4.0L;
    const long double s = std::sin(lat), co = std::cos(lat), q = c.earth_radius / r;
    const long double p2 = (3 * s * s - 1) / 2, p3 = (5 * s * s * s - 3 * s) / 2;
    const long double p4 = (35 * s * s * s * s - 30 * s * s + 3) / 8;
    const long double gr =
        -c.mu / (r * r) * (1 - 3 * c.j2 * q * q * p2 - 4 * c.j3 * q * q * q * p3 - 5 * c.j4 * q * q * q * q * p4);
    // Polar term written out as printed, one harmonic at a time.
    const long double gp = 3 * c.mu / (r * r) * q * q * s * co *
                           (c.j2 + 0.5L * c.j3 * q * (5 * s * s - 1) + 5.0L / 6.0L * c.j4 * q * q * (7 * s * s - 1));
    const GravityVector g = gravity_at(static_cast<double>(r), static_cast<double>(lat), c);
    CHECK(g.radial == doctest::Approx(static_cast<double>(gr)).epsilon(1e-12));
    CHECK(g.polar == doctest::Approx(static_cast<double>(gp)).epsilon(1e-12));

    // With J2 alone the polar term is the latitude derivative of the potential.
    GravityConstants j2 = c;
    j2.j3 = j2.j4 = 0.0;
    const long double dp2 = 3 * s;
    CHECK(gravity_at(static_cast<double>(r), static_cast<double>(lat), j2).polar ==
          doctest::Approx(static_cast<double>(c.mu / (r * r) * co * c.j2 * q * q * dp2)).epsilon(1e-12));
  }

  TEST_CASE("point mass limit") {
    GravityConstants c;
    const double r = c.earth_radius + 800e3;
    for (double scale : {1.0, 1e-3, 1e-6}) {
      c.j2 = 1.0826e-3 * scale;
      c.j3 = -2.5327e-6 * scale;
      c.j4 = -1.6196e-6 * scale;
      const double rel = std::abs(gravity_at(r, 0.7, c).radial / (-c.mu / (r * r)) - 1.0);
      CHECK(rel <= 2e-3 * scale);
    }
  }
}
