#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numeric>

#include "desurv/error.hpp"
#include "desurv/flux.hpp"

using namespace desurv;

namespace {

const char* kTwoBins =
    "az_deg,el_deg,flux_m2yr,vel_ms,diam_m\n"
    "0,0,0.8,10000,0.001\n"
    "90,0,0.2,8000,0.002\n";
const char* kThreePoints =
    "diam_m,cumflux_m2yr\n"
    "0.0001,1.0\n"
    "0.001,0.1\n"
    "0.01,0.001\n";

double sum_flux(const std::vector<VectorFluxElement>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0, [](double s, const VectorFluxElement& e) { return s + e.flux; });
}

FluxModel power_law_model(double share) {
  std::vector<CumulativeFluxPoint> cum;
  for (double d = 1e-4; d <= 0.1 * (1 + 1e-9); d *= std::pow(10.0, 0.25)) cum.push_back({d, 1e-3 * std::pow(d / 1e-3, -2.5)});
  const double total = cum.front().flux;
  return FluxModel({{0, 0, share * total, 1e4, 1e-3}, {180, 0, (1 - share) * total, 1e4, 1e-3}}, cum);
}

}  // namespace

TEST_SUITE("debris-flux") {
  TEST_CASE("two bins sum to the total") {
    const FluxModel m = parse_flux_tables(kTwoBins, kThreePoints);
    CHECK(m.total_flux() == doctest::Approx(1.0));
    CHECK(m.bins().size() == 2);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(parse_flux_tables(kTwoBins, "diam_m,cumflux_m2yr\n0.001,0.1\n0.002,0.2\n"), Error);
    CHECK_THROWS_AS(parse_flux_tables("az_deg,el_deg,flux_m2yr,vel_ms,diam_m\n0,0,-1,10000,0.001\n", kThreePoints),
                    Error);
    CHECK_THROWS_AS(parse_flux_tables("az_deg,el_deg,flux_m2yr,vel_ms,diam_m\n0,0,abc,10000,0.001\n", kThreePoints),
                    Error);
    try {
      parse_flux_tables(kTwoBins, "diam_m,cumflux_m2yr\n0.001,0.1\n0.002,0.2\n");
    } catch (const Error& e) {
      CHECK(e.module() == "debris-flux");
    }
  }

  TEST_CASE("bundled synthetic model") {
    const FluxModel m = load_flux_directory(DESURV_DATA_DIR "/flux/synthetic");
    CHECK(m.total_flux() > 0.0);
    const FluxModel gen = synthetic_flux_model();
    CHECK(gen.total_flux() == doctest::Approx(m.total_flux()).epsilon(1e-9));
    double sum = 0.0;
    for (const FluxBin& b : m.bins()) sum += b.flux;
    CHECK(sum == doctest::Approx(m.total_flux()).epsilon(1e-9));
  }

  TEST_CASE("flux files round trip") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "desurv_flux_roundtrip";
    std::filesystem::remove_all(dir);
    const FluxModel m = synthetic_flux_model();
    write_flux_tables(m, dir);
    const FluxModel back = load_flux_directory(dir);
    CHECK(back.bins().size() == m.bins().size());
    CHECK(back.total_flux() == doctest::Approx(m.total_flux()).epsilon(1e-12));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("single sector carries the total flux") {
    const FluxModel m = synthetic_flux_model();
    const auto v = build_vector_flux_elements(m, 1, 1);
    REQUIRE(v.size() == 1);
    CHECK(v[0].flux == doctest::Approx(m.total_flux()).epsilon(1e-12));
    CHECK(norm(v[0].direction) == doctest::Approx(1.0));
    // The synthetic flux arrives from ahead, so particles travel towards -x.
    CHECK(v[0].direction.x < 0.0);
  }

  TEST_CASE("symmetric bins split evenly") {
    const FluxModel m({{45, 0, 0.5, 1e4, 1e-3}, {-45, 0, 0.5, 1e4, 1e-3}}, {{1e-4, 1.0}, {1e-2, 1e-3}});
    const auto v = build_vector_flux_elements(m, 2, 1);
    REQUIRE(v.size() == 2);
    for (const auto& e : v) {
      CHECK(e.flux == doctest::Approx(0.5));
      CHECK(e.direction.x == doctest::Approx(-std::sqrt(0.5)));
      CHECK(std::abs(e.direction.y) == doctest::Approx(std::sqrt(0.5)));
    }
    CHECK(v[0].direction.y == doctest::Approx(-v[1].direction.y));
  }

  TEST_CASE("weighted sector averages") {
    const FluxModel m({{10, 0, 0.6, 9000, 1e-3}, {50, 20, 0.3, 12000, 3e-3}, {-120, 0, 0.1, 5000, 2e-3}},
                      {{1e-4, 1.0}, {1e-2, 1e-3}});
    const auto v = build_vector_flux_elements(m, 2, 1);
    REQUIRE(v.size() == 2);
    const VectorFluxElement& front = v[0].flux > v[1].flux ? v[0] : v[1];
    CHECK(front.flux == doctest::Approx(0.9));
    CHECK(front.velocity == doctest::Approx((0.6 * 9000 + 0.3 * 12000) / 0.9));
    CHECK(front.diameter == doctest::Approx((0.6 * 1e-3 + 0.3 * 3e-3) / 0.9));
    const double d = 3.141592653589793 / 180.0;
    Vec3 sum = 0.6 * Vec3{std::cos(10 * d), std::sin(10 * d), 0.0} +
               0.3 * Vec3{std::cos(20 * d) * std::cos(50 * d), std::cos(20 * d) * std::sin(50 * d), std::sin(20 * d)};
    sum = -normalized(sum);
    CHECK(front.direction.x == doctest::Approx(sum.x));
    CHECK(front.direction.y == doctest::Approx(sum.y));
    CHECK(front.direction.z == doctest::Approx(sum.z));
  }

  TEST_CASE("sectorisation conserves the total flux") {
    const FluxModel m = synthetic_flux_model();
    for (int az : {1, 2, 3, 4, 6, 12, 24, 36}) {
      for (int el : {1, 2, 3, 6, 9}) {
        CAPTURE(az);
        CAPTURE(el);
        CHECK(sum_flux(build_vector_flux_elements(m, az, el)) == doctest::Approx(m.total_flux()).epsilon(1e-9));
      }
    }
    const FluxModel iso = isotropic_flux_model(0.5, 1e4, 1e-3);
    CHECK(sum_flux(build_vector_flux_elements(iso, 12, 6)) == doctest::Approx(0.5).epsilon(1e-9));
  }

  TEST_CASE("bad grids") {
    CHECK_THROWS_AS(build_vector_flux_elements(synthetic_flux_model(), 0, 6), Error);
    CHECK_THROWS_AS(build_vector_flux_elements(FluxModel{}, 12, 6), Error);
  }

  TEST_CASE("critical flux") {
    const FluxModel m = power_law_model(0.4);
    const auto v = build_vector_flux_elements(m, 2, 1);
    const VectorFluxElement& e = v[0].flux < v[1].flux ? v[0] : v[1];
    CHECK(e.flux == doctest::Approx(0.4 * m.total_flux()));
    CHECK(critical_flux(m, e, 2e-3) == doctest::Approx(0.4 * 1e-3 * std::pow(2.0, -2.5)).epsilon(1e-9));
    CHECK(critical_flux(m, e, 2e-3) == doctest::Approx(7.07e-5).epsilon(1e-3));
    CHECK(critical_flux(m, e, 1e-6) == doctest::Approx(e.flux));
    CHECK(critical_flux(m, e, 1.0) == 0.0);
    double prev = e.flux;
    for (double d = 1e-5; d < 0.2; d *= 1.13) {
      const double c = critical_flux(m, e, d);
      CHECK(c <= prev);
      CHECK(c <= e.flux);
      prev = c;
    }
  }
}
