#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "desurv/aerothermo.hpp"
#include "desurv/config.hpp"
#include "desurv/environment.hpp"
#include "desurv/error.hpp"
#include "desurv/integrator.hpp"
#include "desurv/material.hpp"
#include "desurv/reentry.hpp"

using namespace desurv;

namespace {

constexpr double kPi = std::numbers::pi;

Material unmeltable() {
  Material m = material_by_name("Ti-6Al-4V");
  m.name = "Unmeltable";
  m.melting_temperature = 1e9;
  return m;
}

ReentryState low_state(double altitude, double velocity, double mass) {
  EntryConditions e;
  e.altitude = altitude;
  e.velocity = velocity;
  e.flight_path_angle = -0.1;
  return initial_state(e, mass);
}

ReentryState add(const ReentryState& s, const ReentryRates& d, double h) {
  ReentryState o = s;
  o.radius += h * d.radius;
  o.latitude += h * d.latitude;
  o.longitude += h * d.longitude;
  o.velocity += h * d.velocity;
  o.flight_path_angle += h * d.flight_path_angle;
  o.heading += h * d.heading;
  o.mass += h * d.mass;
  o.wall_temperature += h * d.wall_temperature;
  return o;
}

// Classical fixed-step RK4 on the trajectory equations, with the melt clamp
// applied after every step.
ReentryState rk4(ReentryState s, const ReentryBody& b, const ReentryEnvironment& env, double t_end, int steps) {
  const double h = t_end / steps;
  for (int i = 0; i < steps; ++i) {
    const ReentryRates k1 = trajectory_rhs(s, b, env);
    const ReentryRates k2 = trajectory_rhs(add(s, k1, h / 2), b, env);
    const ReentryRates k3 = trajectory_rhs(add(s, k2, h / 2), b, env);
    const ReentryRates k4 = trajectory_rhs(add(s, k3, h), b, env);
    ReentryState n = s;
    auto comb = [&](double ReentryRates::*f) {
      return h / 6.0 * (k1.*f + 2.0 * k2.*f + 2.0 * k3.*f + k4.*f);
    };
    n.radius += comb(&ReentryRates::radius);
    n.latitude += comb(&ReentryRates::latitude);
    n.longitude += comb(&ReentryRates::longitude);
    n.velocity += comb(&ReentryRates::velocity);
    n.flight_path_angle += comb(&ReentryRates::flight_path_angle);
    n.heading += comb(&ReentryRates::heading);
    n.mass += comb(&ReentryRates::mass);
    n.wall_temperature = std::min(n.wall_temperature + comb(&ReentryRates::wall_temperature),
                                  b.material.melting_temperature);
    s = n;
  }
  return s;
}

ObjectFate fate(std::string name, double m_in, double m_fin) {
  ObjectFate f;
  f.name = std::move(name);
  f.initial_mass = m_in;
  f.final_mass = m_fin;
  f.outcome = m_fin == 0.0 ? Outcome::kDemised : Outcome::kSurvivedGround;
  return f;
}

}  // namespace

TEST_SUITE("demise") {
  TEST_CASE("drag coefficients") {
    const DragCoefficient s = drag_coefficient(Sphere{0.5}, 100.0);
    CHECK(s.cd == doctest::Approx(2.0));
    CHECK(s.reference_area == doctest::Approx(kPi * 0.25));
    CHECK(drag_coefficient_free_molecular(Box{1, 1, 1}).cd == doctest::Approx(3.0));
    CHECK(drag_coefficient_free_molecular(Cylinder{1, 1}).cd == doctest::Approx(2.355));
    const DragCoefficient fm = drag_coefficient_free_molecular(Cylinder{1, 1});
    const DragCoefficient co = drag_coefficient_continuum(Cylinder{1, 1});
    CHECK(drag_coefficient(Cylinder{1, 1}, 10.0).cd == doctest::Approx(fm.cd));
    CHECK(drag_coefficient(Cylinder{1, 1}, 0.01).cd == doctest::Approx(co.cd));
    CHECK(drag_coefficient(Cylinder{1, 1}, std::sqrt(0.1)).cd == doctest::Approx(0.5 * (fm.cd + co.cd)));
  }

  TEST_CASE("regime weight") {
    CHECK(free_molecular_weight(10.0) == 1.0);
    CHECK(free_molecular_weight(1e4) == 1.0);
    CHECK(free_molecular_weight(0.01) == 0.0);
    CHECK(free_molecular_weight(1e-5) == 0.0);
    CHECK(free_molecular_weight(std::sqrt(0.1)) == doctest::Approx(0.5));
    CHECK(regime_of(20.0) == FlowRegime::kFreeMolecular);
    CHECK(regime_of(1.0) == FlowRegime::kTransitional);
    CHECK(regime_of(0.001) == FlowRegime::kContinuum);
  }

  TEST_CASE("reference heat flux") {
    CHECK(reference_heat_flux_free_molecular(1e-3, 0.0) == 0.0);
    CHECK(reference_heat_flux_continuum(1.0, 0.0, 0.3, 300.0, 250.0) == 0.0);
    const double v = 7300.0;
    CHECK(reference_heat_flux_free_molecular(1e-9, v, 0.9) ==
          doctest::Approx(11356.6 * 0.9 * 1e-9 * v * v * v / 1556.0));
    CHECK(reference_heat_flux_free_molecular(1e-9, v, 0.9) == doctest::Approx(2.555e3).epsilon(1e-3));
    CHECK(reference_heat_flux_continuum(kSeaLevelDensity, 7924.8, 0.3048, 300.0, 288.15) ==
          doctest::Approx(1.99876e8).epsilon(1e-5));
  }

  TEST_CASE("averaged heat flux factors") {
    CHECK(heat_flux_factor_free_molecular(Sphere{1}) == doctest::Approx(0.255));
    CHECK(heat_flux_factor_continuum(Sphere{1}) == doctest::Approx(0.345));
    CHECK(averaged_heat_flux(FlatPlate{1, 1, 0.01}, FlowRegime::kFreeMolecular, 1000.0) == doctest::Approx(255.0));
    CHECK_THROWS_AS(averaged_heat_flux(Sphere{1}, FlowRegime::kTransitional, 1000.0), Error);
    for (const PrimitiveShape& s : {PrimitiveShape{Sphere{0.3}}, PrimitiveShape{Box{1, 0.5, 0.4}},
                                    PrimitiveShape{Cylinder{0.5, 1.5}}, PrimitiveShape{FlatPlate{1, 0.5, 0.01}}}) {
      for (double f : {heat_flux_factor_free_molecular(s), heat_flux_factor_continuum(s)}) {
        CHECK(f > 0.0);
      }
    }
    // Equivalent cylinder D = 2 sqrt(0.2), L = 1 over the box wetted area 2.2.
    CHECK(heat_flux_factor_free_molecular(Box{1, 0.5, 0.4}) == doctest::Approx(1.786908).epsilon(1e-6));
  }

  TEST_CASE("circular orbit equilibrium") {
    ReentryEnvironment env;
    env.atmosphere = AtmosphereModel::vacuum();
    env.gravity = GravityConstants::spherical_nonrotating();
    ReentryState s;
    s.radius = env.gravity.earth_radius + 400e3;
    s.velocity = std::sqrt(env.gravity.mu / s.radius);
    s.heading = 0.3;
    s.latitude = 0.2;
    s.mass = 10.0;
    const ReentryRates d = trajectory_rhs(s, ReentryBody::from_shape(Sphere{0.2}, material_by_name("A316"), 10.0), env);
    CHECK(d.radius == 0.0);
    CHECK(d.flight_path_angle == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(d.flight_path_angle) < 1e-15);
    CHECK(std::abs(d.velocity) < 1e-12);
    CHECK(d.mass == 0.0);
  }

  TEST_CASE("wall heating and melting rates") {
    // Hand arithmetic of the two thermal relations.
    CHECK(0.01 * (1e5 - 0.141 * 5.67e-8 * std::pow(300.0, 4)) / 896.0 == doctest::Approx(1.115).epsilon(1e-3));
    CHECK(-0.01 * (1e5 - 0.141 * 5.67e-8 * std::pow(867.0, 4)) / 386116.0 == doctest::Approx(-2.47e-3).epsilon(2e-3));

    const Material al = material_by_name("Al-6061-T6");
    ReentryBody body = ReentryBody::from_shape(Sphere{0.05}, al, 1.0);
    body.wetted_area = 0.01;
    ReentryEnvironment env;
    ReentryState s = low_state(70e3, 7000.0, 1.0);
    s.wall_temperature = 300.0;
    ReentryRates d = trajectory_rhs(s, body, env);
    REQUIRE(d.aero.q_av > 0.0);
    CHECK(d.mass == 0.0);
    CHECK(d.wall_temperature == doctest::Approx(0.01 * (d.aero.q_av - 0.141 * 5.67e-8 * std::pow(300.0, 4)) / 896.0));

    s.wall_temperature = al.melting_temperature;
    d = trajectory_rhs(s, body, env);
    CHECK(d.wall_temperature == 0.0);
    CHECK(d.mass == doctest::Approx(-0.01 * (d.aero.q_av - 0.141 * 5.67e-8 * std::pow(867.0, 4)) / 386116.0));
    CHECK(d.mass < 0.0);

    // Net cooling at the melting point does not remove mass.
    env.atmosphere = AtmosphereModel::vacuum();
    d = trajectory_rhs(s, body, env);
    CHECK(d.mass == 0.0);
    CHECK(d.wall_temperature < 0.0);
  }

  TEST_CASE("zero mass is not a valid state") {
    ReentryState s = low_state(50e3, 1000.0, 0.0);
    CHECK_FALSE(trajectory_rhs(s, ReentryBody::from_shape(Sphere{0.1}, unmeltable(), 1.0), {}).finite);
  }

  TEST_CASE("non-melting object reaches the ground intact") {
    const ReentryBody body = ReentryBody::from_shape(Sphere{0.1}, unmeltable(), 5.0);
    EntryConditions e;
    e.altitude = 78e3;
    const ObjectRun run = simulate_object(initial_state(e, 5.0), body, {});
    CHECK(run.fate.outcome == Outcome::kSurvivedGround);
    CHECK(run.fate.final_mass == 5.0);
    CHECK(run.fate.impact_energy == doctest::Approx(0.5 * 5.0 * run.fate.final_state.velocity *
                                                    run.fate.final_state.velocity));
    CHECK(std::abs(run.fate.final_state.altitude()) <= 1.0);
    for (std::size_t i = 1; i < run.trace.size(); ++i) CHECK(run.trace[i].mass <= run.trace[i - 1].mass);
  }

  TEST_CASE("small slow fragment is a low energy survivor") {
    const ReentryBody body = ReentryBody::from_shape(Sphere{0.005}, material_by_name("Al-6061-T6"), 1e-3);
    const ObjectRun run = simulate_object(low_state(10e3, 5.4, 1e-3), body, {});
    CHECK(run.fate.outcome == Outcome::kSurvivedLowEnergy);
    CHECK(run.fate.flight_time == 0.0);
    CHECK(run.fate.impact_energy < 15.0);
  }

  TEST_CASE("thin aluminium plate demises and matches a fixed step integration") {
    const Material al = material_by_name("Al-6061-T6");
    const double mass = 0.5 * 0.5 * 1e-3 * al.density;
    const ReentryBody body = ReentryBody::from_shape(FlatPlate{0.5, 0.5, 1e-3}, al, mass);
    EntryConditions e;
    e.altitude = 78e3;
    const ReentryState s0 = initial_state(e, mass);
    const ReentryEnvironment env;

    SimulationOptions short_run;
    short_run.max_time = 1.5;
    const ObjectRun partial = simulate_object(s0, body, env, short_run);
    REQUIRE(partial.fate.outcome == Outcome::kFailed);
    REQUIRE(partial.fate.flight_time == doctest::Approx(1.5));
    const ReentryState ref = rk4(s0, body, env, 1.5, 15000);
    const ReentryState& got = partial.fate.final_state;
    CHECK(got.radius == doctest::Approx(ref.radius).epsilon(1e-7));
    CHECK(got.velocity == doctest::Approx(ref.velocity).epsilon(1e-5));
    CHECK(got.flight_path_angle == doctest::Approx(ref.flight_path_angle).epsilon(1e-4));
    CHECK(got.mass == doctest::Approx(ref.mass).epsilon(1e-4));
    CHECK(got.wall_temperature == doctest::Approx(ref.wall_temperature).epsilon(1e-4));

    const ObjectRun full = simulate_object(s0, body, env);
    REQUIRE(full.fate.outcome == Outcome::kDemised);
    CHECK(full.fate.demise_altitude > 0.0);
    CHECK(full.fate.demise_altitude < 78e3);
    for (const TracePoint& p : full.trace) CHECK(p.wall_temperature <= al.melting_temperature + 1e-9);
  }

  TEST_CASE("liquid mass fraction") {
    std::vector<ObjectFate> all_gone = {fate("a", 10, 0), fate("b", 5, 0)};
    CHECK(liquid_mass_fraction(all_gone) == 1.0);
    std::vector<ObjectFate> intact = {fate("a", 10, 10), fate("b", 5, 5)};
    CHECK(liquid_mass_fraction(intact) == 0.0);
    std::vector<ObjectFate> half = {fate("a", 10, 0), fate("b", 10, 10)};
    CHECK(liquid_mass_fraction(half) == doctest::Approx(0.5));
    CHECK_THROWS_AS(liquid_mass_fraction(std::vector<ObjectFate>{}), Error);
  }

  TEST_CASE("entry conditions file") {
    const EntryConditions e = parse_entry_conditions(
        R"({"altitude_km": 120, "flight_path_angle_deg": 0, "velocity_kms": 7.3,
            "longitude_deg": 0, "latitude_deg": 0, "heading_deg": -8})");
    const EntryConditions d;
    CHECK(e.altitude == d.altitude);
    CHECK(e.velocity == d.velocity);
    CHECK(e.flight_path_angle == d.flight_path_angle);
    CHECK(e.heading == doctest::Approx(d.heading));
    CHECK(d.altitude == 120e3);
    CHECK(d.velocity == 7300.0);
    CHECK(d.heading == doctest::Approx(-8.0 * kPi / 180.0));
  }

  TEST_CASE("structure without components") {
    const SpacecraftConfig cfg = parse_configuration(
        "ID,Name,Parent,Shape,Mass,Length,Radius,Width,Height,Quantity,Thickness\n"
        "1,Bus,n/a,Box,100,1,n/a,1,1,1,0.003\n");
    const ReentryReport r = simulate_reentry(cfg, {});
    CHECK(r.objects.empty());
    REQUIRE_FALSE(r.parent.events.empty());
    CHECK(r.parent.events.back().kind == EventKind::kBreakup);
  }

  TEST_CASE("components on a panel that never melts leave at break-up") {
    MaterialLibrary lib;
    lib.add(unmeltable());
    const SpacecraftConfig cfg = parse_configuration(
        "ID,Name,Parent,Shape,Mass,Length,Radius,Width,Height,Quantity,Material,Thickness,Position,Attachment,Role\n"
        "1,Bus,n/a,Box,300,1.2,n/a,1.0,1.0,1,Al-6061-T6,0.003,0;0;0,n/a,structure\n"
        "2,SidePanel,1,Flat-plate,6,1.0,n/a,1.0,0.01,1,Unmeltable,n/a,0;0.5;0,n/a,panel\n"
        "3,Magnetometer,1,Box,1.5,0.2,n/a,0.1,0.1,1,Al-6061-T6,n/a,0;0.4;0.3,2,component\n",
        lib);
    const ParentPhase p = simulate_parent_phase(cfg, {}, {});
    REQUIRE(p.events.size() == 1);
    CHECK(p.events[0].kind == EventKind::kBreakup);
    CHECK(p.breakup_state.altitude() == doctest::Approx(78e3).epsilon(1e-4));
    bool found = false;
    for (const auto& [id, st] : p.releases) {
      if (id != 3) continue;
      found = true;
      CHECK(st.radius == p.breakup_state.radius);
      CHECK(st.velocity == p.breakup_state.velocity);
      CHECK(st.flight_path_angle == p.breakup_state.flight_path_angle);
      CHECK(st.mass == 1.5);
    }
    CHECK(found);
  }

  TEST_CASE("panels detach when they reach their melting point") {
    const SpacecraftConfig cfg = read_configuration(DESURV_DATA_DIR "/configs/panels.csv");
    const ReentryReport r = simulate_reentry(cfg, {});
    bool solar = false, detached = false;
    for (const ReentryEvent& ev : r.parent.events) {
      if (ev.kind == EventKind::kSolarPanelRelease) {
        solar = true;
        CHECK(ev.altitude == doctest::Approx(95e3).epsilon(1e-4));
      }
      if (ev.kind == EventKind::kPanelDetachment) {
        detached = true;
        CHECK(ev.altitude > 78e3);
      }
    }
    CHECK(solar);
    CHECK(detached);
    const double lmf = liquid_mass_fraction(r);
    CHECK(lmf >= 0.0);
    CHECK(lmf <= 1.0);
  }

  TEST_CASE("melting point and heat of fusion lower the liquid mass fraction") {
    const Material base = material_by_name("Al-6061-T6");
    auto melted = [&](const Material& m) {
      const ReentryBody body = ReentryBody::from_shape(Sphere{0.15}, m, 8.0);
      EntryConditions e;
      e.altitude = 78e3;
      const ObjectRun run = simulate_object(initial_state(e, 8.0), body, {});
      return 1.0 - run.fate.final_mass / 8.0;
    };
    const double ref = melted(base);
    Material hot = base;
    hot.melting_temperature *= 1.3;
    Material latent = base;
    latent.heat_of_fusion *= 2.0;
    CHECK(melted(hot) <= ref);
    CHECK(melted(latent) <= ref);
  }
}

TEST_SUITE("integrator") {
  TEST_CASE("exponential decay") {
    DormandPrince dp;
    const auto f = [](double, std::span<const double> y, std::span<double> dy) {
      dy[0] = -y[0];
      return true;
    };
    const IntegrationResult r = dp.integrate(f, 0.0, {1.0}, 5.0);
    CHECK(r.status == IntegrationStatus::kReachedEnd);
    CHECK(r.t == 5.0);
    CHECK(r.y[0] == doctest::Approx(std::exp(-5.0)).epsilon(1e-5));
  }

  TEST_CASE("harmonic oscillator keeps its energy") {
    IntegratorOptions o;
    o.abs_tol = 1e-10;
    o.rel_tol = 1e-10;
    o.max_step = 0.5;
    DormandPrince dp(o);
    const auto f = [](double, std::span<const double> y, std::span<double> dy) {
      dy[0] = y[1];
      dy[1] = -y[0];
      return true;
    };
    const IntegrationResult r = dp.integrate(f, 0.0, {1.0, 0.0}, 2.0 * kPi);
    CHECK(r.y[0] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(r.y[1]) < 1e-7);
  }

  TEST_CASE("terminal event is located within its resolution") {
    DormandPrince dp;
    const auto f = [](double, std::span<const double> y, std::span<double> dy) {
      dy[0] = y[1];
      dy[1] = -9.81;
      return true;
    };
    const TerminalEvent ground{7, [](double, std::span<const double> y) { return y[0]; }, 1e-3};
    const IntegrationResult r = dp.integrate(f, 0.0, {100.0, 0.0}, 100.0, std::span(&ground, 1));
    CHECK(r.status == IntegrationStatus::kEvent);
    CHECK(r.event_id == 7);
    CHECK(r.y[0] <= 0.0);
    CHECK(r.y[0] >= -1e-3);
    CHECK(r.t == doctest::Approx(std::sqrt(200.0 / 9.81)).epsilon(1e-4));
  }

  TEST_CASE("event already reached at the start") {
    DormandPrince dp;
    const auto f = [](double, std::span<const double>, std::span<double> dy) {
      dy[0] = 1.0;
      return true;
    };
    const TerminalEvent ev{1, [](double, std::span<const double> y) { return y[0]; }, 1e-6};
    const IntegrationResult r = dp.integrate(f, 0.0, {-1.0}, 10.0, std::span(&ev, 1));
    CHECK(r.status == IntegrationStatus::kEvent);
    CHECK(r.t == 0.0);
  }

  TEST_CASE("non-finite derivatives end in step underflow with the last valid state") {
    DormandPrince dp;
    const auto f = [](double t, std::span<const double>, std::span<double> dy) {
      dy[0] = 1.0;
      return t < 1.0;
    };
    const IntegrationResult r = dp.integrate(f, 0.0, {0.0}, 5.0);
    CHECK(r.status == IntegrationStatus::kStepUnderflow);
    CHECK(r.t <= 1.0);
    CHECK(r.t > 0.99);
    CHECK(r.y[0] == doctest::Approx(r.t));
  }
}
