#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "desurv/environment.hpp"
#include "desurv/material.hpp"
#include "desurv/vec3.hpp"

namespace desurv {

inline constexpr double kEarthMu = 3.986004418e14;     ///< m^3/s^2
inline constexpr double kMissionEarthRadius = 6378e3;  ///< m
inline constexpr double kStandardGravity = 9.81;       ///< m/s^2
inline constexpr double kSecondsPerYear = 365.25 * 86400.0;

/// Sun-synchronous mission description (SI units, angles in degrees).
struct MissionSpec {
  std::string name;
  double mass = 0.0;                     ///< kg
  double semi_major_axis = 0.0;          ///< m
  double inclination_deg = 98.0;
  double lifetime_years = 0.0;
  double cross_section = 0.0;            ///< m^2
  double drag_coefficient = 2.2;
  double ground_track_tolerance = 700.0;  ///< m
  double inclination_drift_deg = 0.05;   ///< deg/yr
  double injection_sma_error = 35e3;     ///< m
  double injection_inclination_deg = 0.2;
  double isp = 200.0;                    ///< s
  double fuel_density = 1020.0;          ///< kg/m^3
  double k1 = 1.4;                       ///< pressurant volume factor
  double k2 = 1.2;                       ///< tank spacing factor
  double safety_factor = 1.5;
  double disposal_altitude = 600e3;      ///< m
  double structure_density = 100.0;      ///< kg/m^3

  double altitude() const { return semi_major_axis - kMissionEarthRadius; }
};

void validate(const MissionSpec& m);

/// JSON object: name, mass_kg, altitude_km, inclination_deg, lifetime_yr,
/// cross_section_m2 and optionally drag_coefficient,
/// ground_track_tolerance_km, inclination_drift_deg_per_yr,
/// injection_sma_error_km, injection_inclination_error_deg, isp_s,
/// fuel_density_kg_m3, k1, k2, safety_factor, disposal_altitude_km,
/// structure_density_kg_m3. Unknown keys are ignored so the file can also
/// carry optimizer settings.
MissionSpec parse_mission(std::string_view json_text);
MissionSpec read_mission(const std::filesystem::path& path);

/// Two-impulse transfer between circular orbits, magnitude of both burns.
double hohmann_delta_v(double r1, double r2, double mu = kEarthMu);
/// Same transfer with the plane change folded into the second burn.
double hohmann_plane_change_delta_v(double r1, double r2, double plane_change_rad, double mu = kEarthMu);

/// Semi-major-axis loss per orbit (negative).
double decay_per_orbit(double density, double cross_section, double drag_coefficient, double mass,
                       double semi_major_axis);

struct DeltaVBudget {
  double density = 0.0;           ///< kg/m^3 at the nominal altitude
  double orbital_velocity = 0.0;  ///< m/s
  double period = 0.0;            ///< s
  double decay_per_orbit = 0.0;   ///< delta a, m
  double period_change = 0.0;     ///< delta tau, s
  double longitude_tolerance = 0.0;  ///< delta lambda, rad
  double time_tolerance = 0.0;    ///< delta t_0, s
  double orbits = 0.0;            ///< k
  bool every_orbit_fallback = false;
  double decay_sma = 0.0;         ///< delta a_decay, m
  double decay_period_drift = 0.0;  ///< 2 k |delta tau|, s
  double manoeuvre_interval = 0.0;  ///< 2 k orbital periods, s
  long long manoeuvres = 0;
  double r1 = 0.0;
  double r2 = 0.0;
  double decay_per_manoeuvre = 0.0;
  double decay = 0.0;
  double inclination = 0.0;
  double inclination_printed = 0.0;  ///< 2 sin(di/2) t_m, no velocity factor
  double injection = 0.0;
  double disposal = 0.0;
  double total = 0.0;
};

DeltaVBudget delta_v_budget(const MissionSpec& mission, const AtmosphereModel& atmosphere = {});

double propellant_mass(double spacecraft_mass, double delta_v, double isp);

/// Tankage volume K1 m_f / rho_f.
double tankage_volume(double propellant_mass, double k1, double fuel_density);

/// Side of a cube of the given mass and mean density.
double structure_side(double mass, double density = 100.0);

enum class TankShape { kSphere, kCylinder };
std::string_view to_string(TankShape s);
TankShape parse_tank_shape(std::string_view text);

/// Outer radius for n tanks sharing volume v with wall thickness t.
double tank_outer_radius(TankShape shape, double volume, int count, double thickness);

struct TankLayout {
  int count = 0;
  TankShape shape = TankShape::kSphere;
  double outer_radius = 0.0;
  double thickness = 0.0;
  double volume = 0.0;
  double propellant_mass = 0.0;
  double side = 0.0;           ///< l, polygon side
  double circumradius = 0.0;
  std::vector<Vec3> centres;   ///< structure frame
  double shell_mass = 0.0;     ///< per tank
  double assembly_mass = 0.0;  ///< all tanks
  double max_pressure = 0.0;   ///< Pa
};

/// Throws desurv::Error("mission-sizing", ...) when the tanks do not fit in
/// a cube of side structure_side.
TankLayout tank_layout(double propellant_mass, const MissionSpec& mission, int count, TankShape shape,
                       double thickness, double structure_side, const Material& material);

/// Thin-shell wall stress p r / t.
double wall_stress(double pressure, double radius, double thickness);
/// sigma_u t / (r SF).
double tank_max_pressure(double radius, double thickness, double ultimate_strength, double safety_factor = 1.5);
/// 2 to 4 MPa storage band.
bool typical_pressure(double p_max);

struct SizingReport {
  MissionSpec mission;
  DeltaVBudget budget;
  double propellant_mass = 0.0;
  double tankage_volume = 0.0;
  double structure_side = 0.0;
};

SizingReport size_mission(const MissionSpec& mission, const AtmosphereModel& atmosphere = {});
std::string sizing_report_json(const SizingReport& report);

}  // namespace desurv
