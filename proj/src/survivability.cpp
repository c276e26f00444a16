#include "desurv/survivability.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numbers>

#include "desurv/error.hpp"

namespace desurv {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kBallisticVelocity = 3000.0;
constexpr double kHypervelocityVelocity = 7000.0;
constexpr double kMinShieldStandoff = 1e-9;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

const Box& structure_box(const SpacecraftConfig& config) {
  const auto* box = std::get_if<Box>(&config.structure().shape);
  if (!box) throw Error("survivability", "the structure must be a box");
  return *box;
}

double incidence_cos(Face face, Vec3 direction) { return -dot(face_normal(face), normalized(direction)); }

// Combines independent probabilities as 1 - prod(1 - p).
class ProbabilityProduct {
 public:
  void add(double p) { log_survival_ += std::log1p(-std::min(p, 1.0)); }
  double value() const { return clamp01(-std::expm1(log_survival_)); }

 private:
  double log_survival_ = 0.0;
};

}  // namespace

EjectaCone ejecta_cone(double theta_deg, double velocity, double speed_of_sound, double thickness,
                       double particle_diameter) {
  if (!(velocity > 0.0 && speed_of_sound > 0.0 && thickness > 0.0 && particle_diameter > 0.0)) {
    throw Error("survivability", "ejecta cone needs positive velocity, sound speed, thickness and diameter");
  }
  const double vc = velocity / speed_of_sound;
  const double td = thickness / particle_diameter;
  const double c = std::max(0.0, std::cos(theta_deg * kDeg));
  EjectaCone e;
  e.normal_axis = theta_deg * 0.471 * std::pow(vc, -0.086) * std::pow(td, -0.478) * std::pow(c, 0.586);
  e.inline_axis = theta_deg * 1.318 * std::pow(vc, 0.907) * std::pow(td, 0.195) * std::pow(c, 0.394);
  e.normal_spread = std::atan(0.471 * std::pow(vc, 1.096) * std::pow(td, 0.345) * std::pow(c, 0.738)) / kDeg;
  e.inline_spread = std::atan(1.556 * std::pow(vc, -0.049) * std::pow(td, -0.054) * std::pow(c, 1.134)) / kDeg;
  e.ejection_angle = e.inline_axis + 0.5 * e.inline_spread;
  return e;
}

double ejection_angle(double theta_deg, double velocity, double speed_of_sound, double thickness,
                      double particle_diameter) {
  return std::min(kMaxEjectionAngleDeg,
                  ejecta_cone(theta_deg, velocity, speed_of_sound, thickness, particle_diameter).ejection_angle);
}

double vulnerable_zone_extent(double standoff, double target_size, double max_particle_diameter) {
  return 2.0 * (std::tan(kMaxEjectionAngleDeg * kDeg) * standoff + 0.5 * (target_size + max_particle_diameter));
}

double ejecta_extent(double alpha_deg, double standoff, double target_size) {
  return 2.0 * (std::tan(alpha_deg * kDeg) * standoff + 0.5 * target_size);
}

bool face_visible(Vec3 n, Vec3 v) { return dot(n, v) < 0.0; }

double poisson_probability(double flux, double area, double years) {
  return clamp01(-std::expm1(-flux * area * years));
}

FaceFrame face_frame(const Box& b, Face face) {
  const Vec3 half{b.length / 2.0, b.width / 2.0, b.height / 2.0};
  FaceFrame f;
  f.face = face;
  f.axis = static_cast<int>(face) / 2;
  f.u_axis = (f.axis + 1) % 3;
  f.v_axis = (f.axis + 2) % 3;
  f.half_u = half[f.u_axis];
  f.half_v = half[f.v_axis];
  f.half_depth = half[f.axis];
  return f;
}

namespace {

bool circular_section(const ConfigObject& o, const FaceFrame& frame) {
  return std::holds_alternative<Sphere>(o.shape) || (std::holds_alternative<Cylinder>(o.shape) && frame.axis == 2);
}

double section_radius(const ConfigObject& o) {
  if (const auto* s = std::get_if<Sphere>(&o.shape)) return s->radius;
  return std::get<Cylinder>(o.shape).diameter / 2.0;
}

}  // namespace

Polygon section_polygon(const ConfigObject& o, const FaceFrame& frame) {
  const double cu = o.position[frame.u_axis], cv = o.position[frame.v_axis];
  if (circular_section(o, frame)) return circle_polygon(cu, cv, section_radius(o));
  const Vec3 ext = half_extents(o.shape);
  return rectangle(cu, cv, ext[frame.u_axis], ext[frame.v_axis]);
}

double section_area(const ConfigObject& o, const FaceFrame& frame) {
  if (circular_section(o, frame)) return std::numbers::pi * std::pow(section_radius(o), 2);
  const Vec3 ext = half_extents(o.shape);
  return 4.0 * ext[frame.u_axis] * ext[frame.v_axis];
}

double equivalent_diameter(double a) { return 2.0 * std::sqrt(std::max(0.0, a) / std::numbers::pi); }

double VulnerableZone::projected_area(Vec3 direction) const {
  return footprint_area * std::abs(dot(face_normal(face), normalized(direction)));
}

VulnerableZone vulnerable_zone(const SpacecraftConfig& config, const ConfigObject& c, Face face,
                               double max_particle_diameter) {
  const Box& box = structure_box(config);
  const std::string tag = "component " + std::to_string(c.id) + " ('" + c.name + "')";
  if (c.parent != config.structure().id) throw Error("survivability", tag + " is not parented to the structure");
  if (!c.standoff) throw Error("survivability", tag + " has no stand-off distances");
  for (double s : *c.standoff) {
    if (s < -1e-9) throw Error("survivability", tag + " is outside the structure interior");
  }
  const FaceFrame frame = face_frame(box, face);
  VulnerableZone z;
  z.face = face;
  z.standoff = std::max(0.0, (*c.standoff)[static_cast<int>(face)]);
  z.target_size = equivalent_diameter(section_area(c, frame));
  z.max_particle_diameter = max_particle_diameter;
  z.extent = vulnerable_zone_extent(z.standoff, z.target_size, max_particle_diameter);
  z.centre = {c.position[frame.u_axis], c.position[frame.v_axis]};
  z.footprint = clip_to_rectangle(rectangle(z.centre.x, z.centre.y, z.extent / 2.0, z.extent / 2.0), -frame.half_u,
                                  frame.half_u, -frame.half_v, frame.half_v);
  z.footprint_area = area(z.footprint);
  if (!(z.footprint_area > 0.0)) z.footprint.clear();
  return z;
}

ImpactRegime regime_of_velocity(double v) {
  if (v <= kBallisticVelocity) return ImpactRegime::kBallistic;
  if (v >= kHypervelocityVelocity) return ImpactRegime::kHypervelocity;
  return ImpactRegime::kShatter;
}

double hypervelocity_weight(double v) {
  return std::clamp((v - kBallisticVelocity) / (kHypervelocityVelocity - kBallisticVelocity), 0.0, 1.0);
}

double hypervelocity_correction(std::span<const double> extents, double ejecta) {
  if (!(ejecta > 0.0)) return extents.empty() ? 1.0 : 0.0;
  double sum = 0.0;
  for (double d : extents) sum += d;
  return clamp01(1.0 - sum / ejecta);
}

double projected_shield_extent(double shield_size, double target_standoff, double shield_standoff) {
  return shield_size * target_standoff / std::max(shield_standoff, kMinShieldStandoff);
}

double ballistic_correction(double visible_area, double target_area) {
  if (!(target_area > 0.0)) throw Error("survivability", "degenerate target section");
  return clamp01(std::sqrt(std::max(0.0, visible_area) / target_area));
}

std::vector<Shield> select_shields(const SpacecraftConfig& config, const ConfigObject& target,
                                   const VulnerableZone& zone) {
  std::vector<Shield> out;
  if (zone.null()) return out;
  const FaceFrame frame = face_frame(structure_box(config), zone.face);
  const int f = static_cast<int>(zone.face);
  for (const ConfigObject* k : config.children(config.structure().id)) {
    if (k->id == target.id || k->role != Role::kComponent || !k->standoff) continue;
    const double sk = (*k->standoff)[f];
    if (!(sk < zone.standoff)) continue;
    const double scale = zone.standoff / std::max(sk, kMinShieldStandoff);
    Polygon p = scaled_about(section_polygon(*k, frame), zone.centre, scale);
    p = clip_to_rectangle(p, -frame.half_u, frame.half_u, -frame.half_v, frame.half_v);
    if (p.empty() || !overlaps(p, zone.footprint)) continue;
    out.push_back({k->id, sk, convex_hull(std::move(p))});
  }
  return out;
}

ShieldingCorrection shielding_correction(const Polygon& target_section, std::span<const Shield> shields,
                                         double ejecta) {
  ShieldingCorrection cf;
  cf.target_area = area(target_section);
  if (!(cf.target_area > 0.0)) throw Error("survivability", "degenerate target section");
  std::vector<Polygon> visible{target_section};
  std::vector<double> extents;
  for (const Shield& s : shields) {
    extents.push_back(equivalent_diameter(area(s.projected)));
    visible = subtract_convex(visible, s.projected);
  }
  cf.visible_area = std::min(cf.target_area, area(visible));
  cf.shield_count = static_cast<int>(shields.size());
  cf.hypervelocity = hypervelocity_correction(extents, ejecta);
  cf.ballistic = ballistic_correction(cf.visible_area, cf.target_area);
  return cf;
}

double component_hit_probability(double velocity, double particle_diameter, double ejecta, double zone_extent,
                                 double target_size, const ShieldingCorrection& cf) {
  if (!(zone_extent > 0.0)) return 0.0;
  const double p_hyp = clamp01(ejecta * cf.hypervelocity / zone_extent);
  const double p_ball = clamp01((particle_diameter + cf.ballistic * target_size) / zone_extent);
  const double w = hypervelocity_weight(velocity);
  return clamp01(w * p_hyp + (1.0 - w) * p_ball);
}

WallLayer structure_wall(const SpacecraftConfig& config) {
  const ConfigObject& s = config.structure();
  if (!s.wall_thickness || !(*s.wall_thickness > 0.0)) {
    throw Error("survivability", "structure '" + s.name + "' needs a wall thickness");
  }
  return {s.material, *s.wall_thickness, 0.0};
}

WallLayer component_wall(const ConfigObject& c) {
  if (c.wall_thickness && *c.wall_thickness > 0.0) return {c.material, *c.wall_thickness, 0.0};
  const Vec3 e = half_extents(c.shape);
  return {c.material, std::min({e.x, e.y, e.z}), 0.0};
}

StructurePenetration structure_penetration(const SpacecraftConfig& config, std::span<const VectorFluxElement> vfes,
                                           const FluxModel& model, double years, const BallisticLimit& ble) {
  const Box& box = structure_box(config);
  const WallLayer wall = structure_wall(config);
  StructurePenetration out;
  ProbabilityProduct total;
  for (Face face : kAllFaces) {
    const FaceFrame frame = face_frame(box, face);
    const double face_area = 4.0 * frame.half_u * frame.half_v;
    for (const VectorFluxElement& v : vfes) {
      if (!face_visible(face_normal(face), v.direction)) continue;
      FaceImpact fi;
      fi.face = face;
      fi.sector = v.sector;
      const double c = incidence_cos(face, v.direction);
      fi.incidence_deg = std::acos(std::clamp(c, -1.0, 1.0)) / kDeg;
      fi.projected_area = face_area * c;
      fi.critical_diameter = ble.critical_diameter({v.velocity, fi.incidence_deg * kDeg}, {}, wall);
      fi.p_ble = poisson_probability(critical_flux(model, v, fi.critical_diameter), fi.projected_area, years);
      fi.p_struct = fi.p_ble;
      fi.p_comp = 1.0;
      fi.probability = fi.p_ble;
      total.add(fi.probability);
      out.impacts.push_back(fi);
    }
  }
  out.probability = total.value();
  return out;
}

ComponentPenetration component_penetration(const SpacecraftConfig& config, const ConfigObject& component,
                                           std::span<const VectorFluxElement> vfes, const FluxModel& model,
                                           double years, const BallisticLimit& ble,
                                           const SurvivabilityOptions& options) {
  const Box& box = structure_box(config);
  const WallLayer outer = structure_wall(config);
  const WallLayer inner = component_wall(component);
  const bool resistant = std::find(options.resistant_components.begin(), options.resistant_components.end(),
                                   component.id) != options.resistant_components.end();
  const double dmax = resistant ? options.resistant_max_diameter : options.vulnerable_max_diameter;

  ComponentPenetration out;
  out.id = component.id;
  out.name = component.name;
  ProbabilityProduct total;
  for (Face face : kAllFaces) {
    VulnerableZone zone = vulnerable_zone(config, component, face, dmax);
    if (zone.null()) {
      out.zones.push_back(std::move(zone));
      continue;
    }
    const FaceFrame frame = face_frame(box, face);
    const Polygon target = section_polygon(component, frame);
    const std::vector<Shield> shields = select_shields(config, component, zone);
    ShieldingCorrection base = shielding_correction(target, shields, 1.0);
    std::vector<double> extents;
    for (const Shield& s : shields) extents.push_back(equivalent_diameter(area(s.projected)));
    WallLayer bumper = outer;
    bumper.spacing = zone.standoff;
    const WallLayer stack[] = {bumper};

    for (const VectorFluxElement& v : vfes) {
      if (!face_visible(face_normal(face), v.direction)) continue;
      FaceImpact fi;
      fi.face = face;
      fi.sector = v.sector;
      const double c = incidence_cos(face, v.direction);
      fi.incidence_deg = std::acos(std::clamp(c, -1.0, 1.0)) / kDeg;
      fi.projected_area = zone.footprint_area * c;
      fi.p_struct = poisson_probability(v.flux, fi.projected_area, years);

      const double alpha = ejection_angle(fi.incidence_deg, v.velocity, outer.material.speed_of_sound,
                                          outer.thickness, v.diameter);
      fi.ejecta_extent = ejecta_extent(alpha, zone.standoff, zone.target_size);
      ShieldingCorrection cf = base;
      cf.hypervelocity = hypervelocity_correction(extents, fi.ejecta_extent);
      fi.cf_hyp = cf.hypervelocity;
      fi.cf_ball = cf.ballistic;
      fi.shield_count = cf.shield_count;
      fi.p_comp = component_hit_probability(v.velocity, v.diameter, fi.ejecta_extent, zone.extent,
                                            zone.target_size, cf);

      fi.critical_diameter = ble.critical_diameter({v.velocity, fi.incidence_deg * kDeg}, stack, inner);
      fi.p_ble = poisson_probability(critical_flux(model, v, fi.critical_diameter), fi.projected_area, years);
      fi.probability = fi.p_struct * fi.p_comp * fi.p_ble;
      total.add(fi.probability);
      out.impacts.push_back(fi);
    }
    out.zones.push_back(std::move(zone));
  }
  out.probability = total.value();
  return out;
}

double pnp_index(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) sum += x;
  return 1.0 - sum;
}

SurvivabilityReport assess_survivability(const SpacecraftConfig& config, const FluxModel& model,
                                         const BallisticLimit& ble, const SurvivabilityOptions& options) {
  const auto vfes = build_vector_flux_elements(model, options.azimuth_sectors, options.elevation_sectors);
  SurvivabilityReport r;
  r.structure = structure_penetration(config, vfes, model, options.mission_years, ble);
  std::vector<double> in_scope;
  for (const ConfigObject* c : config.children(config.structure().id)) {
    if (c->role != Role::kComponent) continue;
    r.components.push_back(component_penetration(config, *c, vfes, model, options.mission_years, ble, options));
    const bool counted = options.scope.empty() ||
                         std::find(options.scope.begin(), options.scope.end(), c->id) != options.scope.end();
    if (counted) in_scope.push_back(r.components.back().probability);
  }
  for (int id : options.scope) {
    const ConfigObject* c = config.find(id);
    if (!c || c->role != Role::kComponent || c->parent != config.structure().id) {
      throw Error("survivability", "scope id " + std::to_string(id) + " is not a direct component");
    }
  }
  r.pnp = pnp_index(in_scope);
  if (r.pnp < 0.0) r.warnings.push_back("PNP below zero: the summed component probabilities exceed 1");
  return r;
}

namespace {

nlohmann::json impact_json(const FaceImpact& f) {
  return {{"face", to_string(f.face)},
          {"sector", f.sector},
          {"incidence_deg", f.incidence_deg},
          {"projected_area_m2", f.projected_area},
          {"critical_diameter_m", f.critical_diameter},
          {"p_struct", f.p_struct},
          {"p_comp", f.p_comp},
          {"p_ble", f.p_ble},
          {"cf_hyp", f.cf_hyp},
          {"cf_ball", f.cf_ball},
          {"ejecta_extent_m", f.ejecta_extent},
          {"shield_count", f.shield_count},
          {"probability", f.probability}};
}

}  // namespace

std::string survivability_report_json(const SurvivabilityReport& r) {
  nlohmann::json j;
  j["pnp"] = r.pnp;
  j["warnings"] = r.warnings;
  nlohmann::json s{{"probability", r.structure.probability}, {"impacts", nlohmann::json::array()}};
  for (const FaceImpact& f : r.structure.impacts) s["impacts"].push_back(impact_json(f));
  j["structure"] = s;
  j["components"] = nlohmann::json::array();
  for (const ComponentPenetration& c : r.components) {
    nlohmann::json cj{{"id", c.id}, {"name", c.name}, {"probability", c.probability}};
    cj["zones"] = nlohmann::json::array();
    for (const VulnerableZone& z : c.zones) {
      cj["zones"].push_back({{"face", to_string(z.face)},
                             {"extent_m", z.extent},
                             {"standoff_m", z.standoff},
                             {"target_size_m", z.target_size},
                             {"footprint_area_m2", z.footprint_area}});
    }
    cj["impacts"] = nlohmann::json::array();
    for (const FaceImpact& f : c.impacts) cj["impacts"].push_back(impact_json(f));
    j["components"].push_back(cj);
  }
  return j.dump(2);
}

}  // namespace desurv
