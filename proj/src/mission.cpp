#include "desurv/mission.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <numbers>

#include "desurv/error.hpp"
#include "desurv/text_table.hpp"

namespace desurv {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kEarthRotation = 7.2921159e-5;  // rad/s

}  // namespace

void validate(const MissionSpec& m) {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw Error("mission-sizing", std::string(what) + " must be > 0");
  };
  positive(m.mass, "mass");
  positive(m.semi_major_axis - kMissionEarthRadius, "altitude");
  positive(m.cross_section, "cross section");
  positive(m.drag_coefficient, "drag coefficient");
  positive(m.ground_track_tolerance, "ground-track tolerance");
  positive(m.isp, "specific impulse");
  positive(m.fuel_density, "fuel density");
  positive(m.k1, "K1");
  positive(m.k2, "K2");
  positive(m.safety_factor, "safety factor");
  positive(m.disposal_altitude, "disposal altitude");
  positive(m.structure_density, "structure density");
  if (!(m.lifetime_years >= 0.0)) throw Error("mission-sizing", "lifetime must be >= 0");
  if (!(m.inclination_drift_deg >= 0.0) || !(m.injection_sma_error >= 0.0) ||
      !(m.injection_inclination_deg >= 0.0)) {
    throw Error("mission-sizing", "drift and injection errors must be >= 0");
  }
  if (m.k2 < 1.0) throw Error("mission-sizing", "K2 must be >= 1 so tanks cannot intersect");
}

MissionSpec parse_mission(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("mission-sizing", std::string("malformed mission JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("mission-sizing", "mission file must hold a JSON object");
  auto req = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
      throw Error("mission-sizing", std::string("missing numeric field '") + key + "'");
    }
    return j[key].get<double>();
  };
  auto opt = [&](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw Error("mission-sizing", std::string("field '") + key + "' must be numeric");
    return j[key].get<double>();
  };
  MissionSpec m;
  m.name = j.value("name", std::string());
  m.mass = req("mass_kg");
  m.semi_major_axis = kMissionEarthRadius + 1e3 * req("altitude_km");
  m.inclination_deg = opt("inclination_deg", m.inclination_deg);
  m.lifetime_years = req("lifetime_yr");
  m.cross_section = req("cross_section_m2");
  m.drag_coefficient = opt("drag_coefficient", m.drag_coefficient);
  m.ground_track_tolerance = 1e3 * opt("ground_track_tolerance_km", m.ground_track_tolerance / 1e3);
  m.inclination_drift_deg = opt("inclination_drift_deg_per_yr", m.inclination_drift_deg);
  m.injection_sma_error = 1e3 * opt("injection_sma_error_km", m.injection_sma_error / 1e3);
  m.injection_inclination_deg = opt("injection_inclination_error_deg", m.injection_inclination_deg);
  m.isp = opt("isp_s", m.isp);
  m.fuel_density = opt("fuel_density_kg_m3", m.fuel_density);
  m.k1 = opt("k1", m.k1);
  m.k2 = opt("k2", m.k2);
  m.safety_factor = opt("safety_factor", m.safety_factor);
  m.disposal_altitude = 1e3 * opt("disposal_altitude_km", m.disposal_altitude / 1e3);
  m.structure_density = opt("structure_density_kg_m3", m.structure_density);
  validate(m);
  return m;
}

MissionSpec read_mission(const std::filesystem::path& path) {
  return parse_mission(read_file(path, "mission-sizing"));
}

double hohmann_delta_v(double r1, double r2, double mu) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw Error("mission-sizing", "orbit radii must be > 0");
  if (r1 > r2) std::swap(r1, r2);
  const double s = r1 + r2;
  return std::sqrt(mu / r1) * (std::sqrt(2.0 * r2 / s) - 1.0) + std::sqrt(mu / r2) * (1.0 - std::sqrt(2.0 * r1 / s));
}

double hohmann_plane_change_delta_v(double r1, double r2, double di, double mu) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw Error("mission-sizing", "orbit radii must be > 0");
  const double s = r1 + r2;
  const double v1 = std::sqrt(mu / r1), v2 = std::sqrt(mu / r2);
  const double burn1 = std::abs(v1 * (std::sqrt(2.0 * r2 / s) - 1.0));
  const double vt = v2 * std::sqrt(2.0 * r1 / s);  // transfer-orbit speed at r2
  const double burn2 = std::sqrt(std::max(0.0, v2 * v2 + vt * vt - 2.0 * v2 * vt * std::cos(di)));
  return burn1 + burn2;
}

double decay_per_orbit(double density, double cross_section, double drag_coefficient, double mass, double a) {
  return -2.0 * std::numbers::pi * density * cross_section * drag_coefficient / mass * a * a;
}

DeltaVBudget delta_v_budget(const MissionSpec& m, const AtmosphereModel& atmosphere) {
  validate(m);
  DeltaVBudget b;
  const double a0 = m.semi_major_axis;
  if (m.altitude() > kMaxAtmosphereAltitude) {
    throw Error("mission-sizing", "orbit altitude above the atmosphere model range");
  }
  b.density = atmosphere.sample(m.altitude()).density;
  b.orbital_velocity = std::sqrt(kEarthMu / a0);
  b.period = 2.0 * std::numbers::pi * a0 / b.orbital_velocity;
  b.decay_per_orbit = decay_per_orbit(b.density, m.cross_section, m.drag_coefficient, m.mass, a0);
  b.period_change = 3.0 * std::numbers::pi / b.orbital_velocity * b.decay_per_orbit;
  b.longitude_tolerance = 2.0 * m.ground_track_tolerance / kMissionEarthRadius;
  b.time_tolerance = b.longitude_tolerance / kEarthRotation;
  const double years_s = m.lifetime_years * kSecondsPerYear;
  b.r2 = a0;

  if (b.period_change == 0.0) {
    b.orbits = std::numeric_limits<double>::infinity();
    b.manoeuvre_interval = std::numeric_limits<double>::infinity();
    b.decay_period_drift = 0.0;
    b.r1 = a0;
  } else {
    b.orbits = std::sqrt(2.0 * b.time_tolerance / std::abs(b.period_change));
    double k = b.orbits;
    if (k < 1.0) {
      // Tolerance tighter than one orbit of decay: correct on every orbit.
      b.every_orbit_fallback = true;
      k = 0.5;
    }
    b.decay_sma = 2.0 * k * std::abs(b.decay_per_orbit);
    b.decay_period_drift = 2.0 * k * std::abs(b.period_change);
    b.manoeuvre_interval = 2.0 * k * b.period;
    b.r1 = a0 - b.decay_sma;
    b.decay_per_manoeuvre = hohmann_delta_v(b.r1, b.r2);
    b.manoeuvres = static_cast<long long>(std::floor(years_s / b.manoeuvre_interval));
    b.decay = static_cast<double>(b.manoeuvres) * b.decay_per_manoeuvre;
  }

  const double half_di = 0.5 * m.inclination_drift_deg * kDeg;
  b.inclination = 2.0 * b.orbital_velocity * std::sin(half_di) * m.lifetime_years;
  b.inclination_printed = 2.0 * std::sin(half_di) * m.lifetime_years;
  b.injection = hohmann_plane_change_delta_v(a0 - m.injection_sma_error, a0, m.injection_inclination_deg * kDeg);
  b.disposal = hohmann_delta_v(a0, kMissionEarthRadius + m.disposal_altitude);
  b.total = b.decay + b.inclination + b.injection + b.disposal;
  return b;
}

double propellant_mass(double ms, double dv, double isp) {
  if (!(ms > 0.0) || !(isp > 0.0) || !(dv >= 0.0)) {
    throw Error("mission-sizing", "propellant mass needs positive mass and Isp and a non-negative delta-V");
  }
  return -ms * std::expm1(-dv / (kStandardGravity * isp));
}

double tankage_volume(double mf, double k1, double rho) { return k1 * mf / rho; }

double structure_side(double mass, double density) {
  if (!(mass > 0.0) || !(density > 0.0)) throw Error("mission-sizing", "structure mass and density must be > 0");
  return std::cbrt(mass / density);
}

std::string_view to_string(TankShape s) { return s == TankShape::kSphere ? "sphere" : "cylinder"; }

TankShape parse_tank_shape(std::string_view t) {
  if (t == "sphere") return TankShape::kSphere;
  if (t == "cylinder") return TankShape::kCylinder;
  throw Error("mission-sizing", "unknown tank shape '" + std::string(t) + "'");
}

double tank_outer_radius(TankShape shape, double volume, int count, double thickness) {
  if (count < 1) throw Error("mission-sizing", "tank count must be >= 1");
  const double per_tank = volume / count;
  const double k = shape == TankShape::kSphere ? 3.0 / (4.0 * std::numbers::pi) : 1.0 / (2.0 * std::numbers::pi);
  return std::cbrt(k * per_tank) + thickness;
}

double wall_stress(double p, double r, double t) { return p * r / t; }

double tank_max_pressure(double r, double t, double su, double sf) {
  if (!(r > t) || !(t > 0.0)) throw Error("mission-sizing", "tank radius must exceed a positive wall thickness");
  return su * t / (r * sf);
}

bool typical_pressure(double p) { return p >= 2e6 && p <= 4e6; }

TankLayout tank_layout(double mf, const MissionSpec& mission, int count, TankShape shape, double thickness,
                       double side, const Material& material) {
  if (count < 1 || count > 6) throw Error("mission-sizing", "tank count must be in [1, 6]");
  if (thickness < 0.0 || thickness > 5e-3 + 1e-12) {
    throw Error("mission-sizing", "tank wall thickness outside [0, 5] mm");
  }
  TankLayout t;
  t.count = count;
  t.shape = shape;
  t.thickness = thickness;
  t.propellant_mass = mf;
  t.volume = tankage_volume(mf, mission.k1, mission.fuel_density);
  t.outer_radius = tank_outer_radius(shape, t.volume, count, thickness);
  t.side = 2.0 * t.outer_radius * mission.k2;
  t.circumradius = count == 1 ? 0.0 : t.side / (2.0 * std::sin(std::numbers::pi / count));
  for (int k = 0; k < count; ++k) {
    const double a = 2.0 * std::numbers::pi * k / count;
    t.centres.push_back({t.circumradius * std::cos(a), t.circumradius * std::sin(a), 0.0});
  }
  if (t.circumradius + t.outer_radius > side / 2.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d %s tanks of radius %.4g m do not fit in a %.4g m structure", count,
                  std::string(to_string(shape)).c_str(), t.outer_radius, side);
    throw Error("mission-sizing", buf);
  }
  const double rm = t.outer_radius - thickness / 2.0;
  const double area = shape == TankShape::kSphere ? 4.0 * std::numbers::pi * rm * rm : 6.0 * std::numbers::pi * rm * rm;
  t.shell_mass = area * thickness * material.density;
  t.assembly_mass = count * t.shell_mass;
  if (thickness > 0.0) {
    t.max_pressure = tank_max_pressure(t.outer_radius, thickness, material.ultimate_strength, mission.safety_factor);
  }
  return t;
}

SizingReport size_mission(const MissionSpec& mission, const AtmosphereModel& atmosphere) {
  SizingReport r;
  r.mission = mission;
  r.budget = delta_v_budget(mission, atmosphere);
  r.propellant_mass = propellant_mass(mission.mass, r.budget.total, mission.isp);
  r.tankage_volume = tankage_volume(r.propellant_mass, mission.k1, mission.fuel_density);
  r.structure_side = structure_side(mission.mass, mission.structure_density);
  return r;
}

std::string sizing_report_json(const SizingReport& r) {
  const DeltaVBudget& b = r.budget;
  auto finite_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  nlohmann::json j;
  j["mission"] = {{"name", r.mission.name},
                  {"mass_kg", r.mission.mass},
                  {"altitude_km", r.mission.altitude() / 1e3},
                  {"inclination_deg", r.mission.inclination_deg},
                  {"lifetime_yr", r.mission.lifetime_years},
                  {"cross_section_m2", r.mission.cross_section},
                  {"drag_coefficient", r.mission.drag_coefficient},
                  {"isp_s", r.mission.isp}};
  j["delta_v"] = {{"density_kg_m3", b.density},
                  {"orbital_velocity_ms", b.orbital_velocity},
                  {"period_s", b.period},
                  {"decay_per_orbit_m", b.decay_per_orbit},
                  {"period_change_per_orbit_s", b.period_change},
                  {"longitude_tolerance_rad", b.longitude_tolerance},
                  {"time_tolerance_s", b.time_tolerance},
                  {"k_orbits", finite_or_null(b.orbits)},
                  {"every_orbit_fallback", b.every_orbit_fallback},
                  {"decay_sma_m", b.decay_sma},
                  {"decay_period_drift_s", b.decay_period_drift},
                  {"manoeuvre_interval_s", finite_or_null(b.manoeuvre_interval)},
                  {"manoeuvres", b.manoeuvres},
                  {"r1_m", b.r1},
                  {"r2_m", b.r2},
                  {"decay_per_manoeuvre_ms", b.decay_per_manoeuvre},
                  {"decay_ms", b.decay},
                  {"inclination_ms", b.inclination},
                  {"inclination_without_velocity_factor", b.inclination_printed},
                  {"injection_ms", b.injection},
                  {"disposal_ms", b.disposal},
                  {"total_ms", b.total}};
  j["propellant_mass_kg"] = r.propellant_mass;
  j["tankage_volume_m3"] = r.tankage_volume;
  j["structure_side_m"] = r.structure_side;
  return j.dump(2);
}

}  // namespace desurv
