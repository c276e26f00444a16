#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "desurv/ballistic_limit.hpp"
#include "desurv/config.hpp"
#include "desurv/error.hpp"
#include "desurv/flux.hpp"
#include "desurv/survivability.hpp"
#include "probability_properties.hpp"

using namespace desurv;

namespace {

ConfigObject structure(double l, double w, double h) {
  ConfigObject s;
  s.id = 1;
  s.name = "structure";
  s.shape = Box{l, w, h};
  s.mass = 500.0;
  s.material = material_by_name("Al-6061-T6");
  s.wall_thickness = 2e-3;
  s.role = Role::kStructure;
  return s;
}

ConfigObject sphere(int id, double r, Vec3 pos, int parent = 1) {
  ConfigObject c;
  c.id = id;
  c.name = "sphere" + std::to_string(id);
  c.parent = parent;
  c.shape = Sphere{r};
  c.mass = 10.0;
  c.material = material_by_name("Ti-6Al-4V");
  c.wall_thickness = 1.5e-3;
  c.role = parent == 1 ? Role::kComponent : Role::kSubComponent;
  c.position = pos;
  return c;
}

std::map<Face, double> per_face(const ComponentPenetration& p) {
  std::map<Face, double> log_survival;
  for (const FaceImpact& fi : p.impacts) log_survival[fi.face] += std::log1p(-fi.probability);
  std::map<Face, double> out;
  for (const auto& [f, l] : log_survival) out[f] = -std::expm1(l);
  return out;
}

}  // namespace

TEST_SUITE("survivability") {
  TEST_CASE("ejecta cone") {
    const EjectaCone normal = ejecta_cone(0.0, 2.0, 1.0, 0.5, 1.0);
    CHECK(normal.normal_axis == 0.0);
    CHECK(normal.inline_axis == 0.0);
    CHECK(normal.inline_spread ==
          doctest::Approx(std::atan(1.556 * std::pow(2.0, -0.049) * std::pow(0.5, -0.054)) * 180.0 / std::numbers::pi));
    const EjectaCone oblique = ejecta_cone(45.0, 2.0, 1.0, 0.5, 1.0);
    CHECK(oblique.normal_axis / 45.0 == doctest::Approx(0.5045).epsilon(1e-3));
    CHECK(oblique.normal_axis == doctest::Approx(22.7).epsilon(2e-3));
    CHECK(oblique.inline_spread == doctest::Approx(std::atan(1.054) * 180.0 / std::numbers::pi).epsilon(1e-3));
    CHECK(oblique.inline_spread == doctest::Approx(46.5).epsilon(2e-3));
    CHECK(oblique.ejection_angle == doctest::Approx(oblique.inline_axis + oblique.inline_spread / 2.0));
    CHECK(ejection_angle(80.0, 14000.0, 5100.0, 3e-3, 1e-4) <= kMaxEjectionAngleDeg);
  }

  TEST_CASE("vulnerable zone extent") {
    CHECK(vulnerable_zone_extent(0.1, 0.5, 0.01) == doctest::Approx(0.905).epsilon(1e-3));
    CHECK(vulnerable_zone_extent(0.0, 0.5, 0.0) == doctest::Approx(0.5));
    const SurvivabilityOptions o;
    CHECK(o.vulnerable_max_diameter == 0.01);
    CHECK(o.resistant_max_diameter == 0.02);
  }

  TEST_CASE("vulnerable zone on a structure face") {
    const SpacecraftConfig cfg = SpacecraftConfig::build({structure(2, 2, 2), sphere(2, 0.3, {0.6, 0.2, 0.0})});
    const ConfigObject& c = cfg.get(2);
    const VulnerableZone z = vulnerable_zone(cfg, c, Face::kPosX, 0.01);
    CHECK(z.standoff == doctest::Approx(0.1));
    CHECK(z.target_size == doctest::Approx(0.6));
    CHECK(z.extent == doctest::Approx(vulnerable_zone_extent(0.1, 0.6, 0.01)));
    CHECK(z.footprint_area == doctest::Approx(z.extent * z.extent));
    const VulnerableZone far = vulnerable_zone(cfg, c, Face::kNegX, 0.01);
    CHECK(far.extent > 2.0);
    CHECK(far.footprint_area == doctest::Approx(4.0));
    for (const Point2& p : far.footprint) {
      CHECK(std::abs(p.x) <= 1.0 + 1e-12);
      CHECK(std::abs(p.y) <= 1.0 + 1e-12);
    }
    CHECK(VulnerableZone{}.null());
    CHECK(z.projected_area({-1, 0, 0}) == doctest::Approx(z.footprint_area));
    CHECK(z.projected_area(normalized({-1, 1, 0})) == doctest::Approx(z.footprint_area / std::sqrt(2.0)));
  }

  TEST_CASE("vulnerable zone errors") {
    const SpacecraftConfig cfg = SpacecraftConfig::build(
        {structure(2, 2, 2), sphere(2, 0.3, {0, 0, 0}), sphere(3, 0.05, {0, 0, 0}, 2), sphere(4, 0.3, {0.9, 0, 0})});
    CHECK_THROWS_AS(vulnerable_zone(cfg, cfg.get(3), Face::kPosX, 0.01), Error);
    CHECK_THROWS_AS(vulnerable_zone(cfg, cfg.get(4), Face::kPosX, 0.01), Error);
  }

  TEST_CASE("face visibility") {
    CHECK(face_visible({1, 0, 0}, {-1, 0, 0}));
    CHECK_FALSE(face_visible({1, 0, 0}, {1, 0, 0}));
    CHECK_FALSE(face_visible({1, 0, 0}, {0, 1, 0}));
  }

  TEST_CASE("Poisson probability") {
    CHECK(poisson_probability(0.0, 1.0, 10.0) == 0.0);
    CHECK(poisson_probability(std::log(2.0), 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(poisson_probability(0.01, 1.0, 10.0) == doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-15));
    CHECK(poisson_probability(0.01, 1.0, 10.0) == doctest::Approx(0.09516).epsilon(1e-4));
  }

  TEST_CASE("regimes") {
    CHECK(regime_of_velocity(3000.0) == ImpactRegime::kBallistic);
    CHECK(regime_of_velocity(5000.0) == ImpactRegime::kShatter);
    CHECK(regime_of_velocity(7000.0) == ImpactRegime::kHypervelocity);
    CHECK(hypervelocity_weight(5000.0) == doctest::Approx(0.5));
  }

  TEST_CASE("component hit probability") {
    const ShieldingCorrection none;
    CHECK(component_hit_probability(10e3, 0.001, 0.905, 0.905, 0.5, none) == doctest::Approx(1.0));
    CHECK(component_hit_probability(2000.0, 0.01, 0.3, 0.905, 0.5, none) == doctest::Approx(0.5635).epsilon(1e-4));
    CHECK(component_hit_probability(10e3, 0.01, 0.4, 0.905, 0.5, none) == doctest::Approx(0.4 / 0.905));
    const double hyp = 0.4 / 0.905, ball = 0.51 / 0.905;
    CHECK(component_hit_probability(5000.0, 0.01, 0.4, 0.905, 0.5, none) == doctest::Approx(0.5 * (hyp + ball)));
    CHECK(component_hit_probability(10e3, 0.01, 3.0, 0.905, 0.5, none) == 1.0);
  }

  TEST_CASE("shielding corrections") {
    const Polygon target = circle_polygon(0, 0, 0.25);
    const ShieldingCorrection open = shielding_correction(target, {}, 1.0);
    CHECK(open.hypervelocity == 1.0);
    CHECK(open.ballistic == doctest::Approx(1.0));
    CHECK(open.shield_count == 0);

    const double ext = projected_shield_extent(0.1, 0.4, 0.2);
    CHECK(ext == doctest::Approx(0.2));
    const double exts[] = {ext};
    CHECK(hypervelocity_correction(exts, 1.0) == doctest::Approx(0.8));

    const Shield cover{9, 0.1, rectangle(0, 0, 1, 1)};
    const ShieldingCorrection blocked = shielding_correction(target, std::span(&cover, 1), 1.0);
    CHECK(blocked.visible_area == doctest::Approx(0.0));
    CHECK(blocked.ballistic == 0.0);
    CHECK(blocked.hypervelocity == 0.0);

    const Shield half{9, 0.1, rectangle(0.5, 0, 0.5, 1)};
    const ShieldingCorrection part = shielding_correction(target, std::span(&half, 1), 1.0);
    CHECK(part.visible_area == doctest::Approx(0.5 * area(target)).epsilon(1e-9));
    CHECK(part.ballistic == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK_THROWS_AS(shielding_correction(Polygon{}, {}, 1.0), Error);
    CHECK_THROWS_AS(ballistic_correction(0.1, 0.0), Error);
  }

  TEST_CASE("shield selection") {
    // The small sphere sits between the +x face and the target.
    const SpacecraftConfig cfg = SpacecraftConfig::build(
        {structure(2, 2, 2), sphere(2, 0.2, {-0.3, 0, 0}), sphere(3, 0.1, {0.6, 0, 0})});
    const VulnerableZone z = vulnerable_zone(cfg, cfg.get(2), Face::kPosX, 0.01);
    const std::vector<Shield> s = select_shields(cfg, cfg.get(2), z);
    REQUIRE(s.size() == 1);
    CHECK(s[0].id == 3);
    const double scale = z.standoff / s[0].standoff;
    CHECK(area(s[0].projected) == doctest::Approx(std::numbers::pi * 0.01 * scale * scale).epsilon(1e-6));
    const VulnerableZone back = vulnerable_zone(cfg, cfg.get(2), Face::kNegX, 0.01);
    CHECK(select_shields(cfg, cfg.get(2), back).empty());
  }

  TEST_CASE("structure penetration") {
    const SpacecraftConfig cfg = SpacecraftConfig::build({structure(2, 1.5, 1), sphere(2, 0.3, {0, 0, 0})});
    const FluxModel model = synthetic_flux_model();
    const auto vfes = build_vector_flux_elements(model, 12, 6);
    const PowerLawBle ble;
    CHECK(structure_penetration(cfg, vfes, model, 0.0, ble).probability == 0.0);
    const StructurePenetration sp = structure_penetration(cfg, vfes, model, 10.0, ble);
    double survive = 1.0;
    for (const FaceImpact& fi : sp.impacts) {
      survive *= 1.0 - fi.probability;
      CHECK(fi.projected_area > 0.0);
    }
    CHECK(sp.probability == doctest::Approx(1.0 - survive).epsilon(1e-12));
    CHECK(sp.probability > 0.0);
    // Two equal independent terms combine as 1 - (1 - p)^2.
    CHECK(1.0 - (1.0 - 0.1) * (1.0 - 0.1) == doctest::Approx(0.19));
  }

  TEST_CASE("component penetration") {
    const SpacecraftConfig cfg = SpacecraftConfig::build({structure(2, 1.5, 1), sphere(2, 0.3, {0.3, 0, 0})});
    const FluxModel model = synthetic_flux_model();
    const auto vfes = build_vector_flux_elements(model, 12, 6);
    const PowerLawBle ble;
    CHECK(component_penetration(cfg, cfg.get(2), vfes, model, 0.0, ble).probability == 0.0);
    const ComponentPenetration p = component_penetration(cfg, cfg.get(2), vfes, model, 10.0, ble);
    double survive = 1.0;
    for (const FaceImpact& fi : p.impacts) {
      CHECK(fi.probability == doctest::Approx(fi.p_struct * fi.p_comp * fi.p_ble));
      survive *= 1.0 - fi.probability;
    }
    CHECK(p.probability == doctest::Approx(1.0 - survive).epsilon(1e-12));
    CHECK(p.probability > 0.0);
    CHECK(p.zones.size() == 6);
    CHECK(0.2 * 0.5 * 0.1 == doctest::Approx(0.01));

    std::vector<VectorFluxElement> none = vfes;
    for (auto& v : none) v.flux = 0.0;
    CHECK(component_penetration(cfg, cfg.get(2), none, model, 10.0, ble).probability == 0.0);
  }

  TEST_CASE("symmetric cube under isotropic flux") {
    const SpacecraftConfig cfg = SpacecraftConfig::build({structure(2, 2, 2), sphere(2, 0.3, {0, 0, 0})});
    const FluxModel model = isotropic_flux_model(0.1, 10e3, 1e-3, 6);
    const auto vfes = build_vector_flux_elements(model, 12, 6);
    const PowerLawBle ble;
    const auto faces = per_face(component_penetration(cfg, cfg.get(2), vfes, model, 10.0, ble));
    REQUIRE(faces.size() == 6);
    CHECK(faces.at(Face::kPosX) == doctest::Approx(faces.at(Face::kNegX)).epsilon(1e-9));
    CHECK(faces.at(Face::kPosY) == doctest::Approx(faces.at(Face::kNegY)).epsilon(1e-9));
    CHECK(faces.at(Face::kPosZ) == doctest::Approx(faces.at(Face::kNegZ)).epsilon(1e-9));
    CHECK(faces.at(Face::kPosX) > 0.0);
  }

  TEST_CASE("PNP index") {
    CHECK(pnp_index(std::vector<double>{0.0, 0.0}) == 1.0);
    CHECK(pnp_index(std::vector<double>{0.01, 0.02}) == doctest::Approx(0.97));
    CHECK(pnp_index(std::vector<double>(200, 0.01)) == doctest::Approx(-1.0));
  }

  TEST_CASE("negative PNP is reported with a warning") {
    std::vector<ConfigObject> objs{structure(3, 3, 3)};
    for (int i = 0; i < 8; ++i) objs.push_back(sphere(2 + i, 0.2, {-1.0 + 0.25 * i, 0.0, 0.0}));
    const SpacecraftConfig cfg = SpacecraftConfig::build(objs);
    SyntheticFluxParams fp;
    fp.reference_flux = 50.0;
    SurvivabilityOptions o;
    o.mission_years = 50.0;
    const SurvivabilityReport r = assess_survivability(cfg, synthetic_flux_model(fp), PowerLawBle{}, o);
    CHECK(r.pnp < 0.0);
    CHECK(r.warnings.size() == 1);
  }

  TEST_CASE("report for the reference spacecraft") {
    const SpacecraftConfig cfg = read_configuration(DESURV_DATA_DIR "/configs/reference.csv");
    const SurvivabilityReport r = assess_survivability(cfg, synthetic_flux_model(), PowerLawBle{});
    CHECK(r.components.size() == 2);
    CHECK(r.pnp <= 1.0);
    CHECK(r.pnp > 0.9);
    CHECK(r.pnp == doctest::Approx(1.0 - r.components[0].probability - r.components[1].probability));
    const auto j = nlohmann::json::parse(survivability_report_json(r));
    CHECK(j["pnp"].get<double>() == doctest::Approx(r.pnp));
    CHECK(j["components"].size() == 2);
    SurvivabilityOptions scoped;
    scoped.scope = {1};
    const SurvivabilityReport only_tank = assess_survivability(cfg, synthetic_flux_model(), PowerLawBle{}, scoped);
    CHECK(only_tank.pnp == doctest::Approx(1.0 - r.components[0].probability));
    scoped.scope = {5};
    CHECK_THROWS_AS(assess_survivability(cfg, synthetic_flux_model(), PowerLawBle{}, scoped), Error);
  }

  TEST_CASE("probability algebra properties") {
    testing::ProbabilityProperties props(20260415);
    const testing::PropertyReport r = props.run(1000);
    for (const auto& f : r.failures) MESSAGE(f);
    CHECK(r.cases == 1000);
    CHECK(r.ok());
  }
}
