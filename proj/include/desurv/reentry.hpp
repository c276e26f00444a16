#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "desurv/aerothermo.hpp"
#include "desurv/config.hpp"
#include "desurv/environment.hpp"
#include "desurv/integrator.hpp"

namespace desurv {

/// Initial conditions of the re-entry, SI units and radians.
struct EntryConditions {
  double altitude = 120e3;
  double flight_path_angle = 0.0;
  double velocity = 7300.0;  ///< relative to the atmosphere
  double longitude = 0.0;
  double latitude = 0.0;
  double heading = -8.0 * 0.017453292519943295;
};

/// JSON object with altitude_km, flight_path_angle_deg, velocity_kms,
/// longitude_deg, latitude_deg, heading_deg. Missing keys keep the defaults.
EntryConditions parse_entry_conditions(std::string_view json_text);
EntryConditions read_entry_conditions(const std::filesystem::path& path);

struct ReentryState {
  double radius = 0.0;             ///< m
  double latitude = 0.0;           ///< rad
  double longitude = 0.0;          ///< rad
  double velocity = 0.0;           ///< m/s, relative
  double flight_path_angle = 0.0;  ///< rad
  double heading = 0.0;            ///< rad
  double mass = 0.0;               ///< kg
  double wall_temperature = 300.0; ///< K
  double melt_fraction = 0.0;      ///< 1 - m / m_in

  double altitude(const GravityConstants& g = {}) const { return radius - g.earth_radius; }
  double kinetic_energy() const { return 0.5 * mass * velocity * velocity; }
};

ReentryState initial_state(const EntryConditions& entry, double mass, double wall_temperature = 300.0,
                           const GravityConstants& g = {});

struct ReentryEnvironment {
  AtmosphereModel atmosphere;
  GravityConstants gravity;
  AeroThermoParams aero;
};

/// Lumped-mass body seen by the trajectory equations. While it melts, every
/// length scales with (m / m_in)^(1/3).
struct ReentryBody {
  PrimitiveShape shape;
  Material material;
  double initial_mass = 0.0;
  double wetted_area = 0.0;
  /// Extra C_D * A carried by appendages (solar arrays on the parent).
  double extra_drag_area = 0.0;
  /// False for the parent structure in the first phase: it heats but does
  /// not lose mass.
  bool ablates = true;

  static ReentryBody from_shape(const PrimitiveShape& shape, const Material& material, double mass);
};

struct ReentryRates {
  double radius = 0.0;
  double latitude = 0.0;
  double longitude = 0.0;
  double velocity = 0.0;
  double flight_path_angle = 0.0;
  double heading = 0.0;
  double mass = 0.0;
  double wall_temperature = 0.0;
  AeroThermoSample aero;
  bool finite = true;
};

/// Equations of motion plus the lumped thermal balance. Below the melting
/// temperature the wall heats; at it, a positive net flux melts mass instead.
ReentryRates trajectory_rhs(const ReentryState& s, const ReentryBody& body, const ReentryEnvironment& env);

enum class Outcome { kDemised, kSurvivedGround, kSurvivedLowEnergy, kFailed };
std::string_view to_string(Outcome o);

struct TracePoint {
  double time = 0.0;
  double altitude = 0.0;
  double velocity = 0.0;
  double flight_path_angle = 0.0;
  double mass = 0.0;
  double wall_temperature = 0.0;
};

struct ObjectFate {
  int id = -1;
  std::string name;
  Outcome outcome = Outcome::kFailed;
  double initial_mass = 0.0;
  double final_mass = 0.0;
  double demise_altitude = 0.0;  ///< m, meaningful when demised
  double landing_latitude = 0.0;
  double landing_longitude = 0.0;
  double final_cross_section = 0.0;  ///< m^2
  double impact_energy = 0.0;        ///< J
  double flight_time = 0.0;          ///< s since release
  std::size_t steps = 0;             ///< accepted integrator steps
  ReentryState final_state;
  std::string error;  ///< set for kFailed
};

struct ObjectRun {
  ObjectFate fate;
  std::vector<TracePoint> trace;
};

struct SimulationOptions {
  IntegratorOptions integrator;
  double max_time = 20000.0;       ///< s after release
  double trace_interval = 1.0;     ///< s; <= 0 disables the trace
  double demise_fraction = 1e-6;   ///< demised when m <= fraction * m_in
  double low_energy = 15.0;        ///< J
  double altitude_resolution = 1.0;
  double mass_resolution = 1e-4;
};

ObjectRun simulate_object(const ReentryState& initial, const ReentryBody& body, const ReentryEnvironment& env,
                          const SimulationOptions& options = {});

struct ReentryOptions {
  double breakup_altitude = 78e3;
  double solar_panel_altitude = 95e3;
  /// Wall temperature of internal components when they are released.
  double component_temperature = 300.0;
  SimulationOptions simulation;
};

enum class EventKind { kSolarPanelRelease, kPanelDetachment, kBreakup, kParentGround };
std::string_view to_string(EventKind kind);

struct ReentryEvent {
  EventKind kind = EventKind::kBreakup;
  double time = 0.0;
  double altitude = 0.0;
  std::vector<int> released;  ///< object ids leaving the parent
};

/// Result of the parent flight down to break-up.
struct ParentPhase {
  ReentryState breakup_state;
  double breakup_time = 0.0;
  std::vector<ReentryEvent> events;
  std::vector<TracePoint> trace;
  /// Release state and time of every object leaving the parent, by id.
  std::vector<std::pair<int, ReentryState>> releases;
  std::vector<double> release_times;
};

ParentPhase simulate_parent_phase(const SpacecraftConfig& config, const EntryConditions& entry,
                                  const ReentryEnvironment& env, const ReentryOptions& options = {});

struct ReentryReport {
  ParentPhase parent;
  std::vector<ObjectRun> objects;  ///< id order
};

/// Second phase only: every released object is flown from its stored state.
ReentryReport simulate_release_phase(const SpacecraftConfig& config, ParentPhase parent,
                                     const ReentryEnvironment& env, const ReentryOptions& options = {});

ReentryReport simulate_reentry(const SpacecraftConfig& config, const EntryConditions& entry,
                               const ReentryEnvironment& env = {}, const ReentryOptions& options = {});

/// 1 - sum(m_fin) / sum(m_in) over the objects in scope (all when empty).
double liquid_mass_fraction(std::span<const ObjectFate> fates, std::span<const int> scope = {});
double liquid_mass_fraction(const ReentryReport& report, std::span<const int> scope = {});

std::string trace_to_csv(const std::vector<TracePoint>& trace);

}  // namespace desurv
