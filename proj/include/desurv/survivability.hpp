#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "desurv/ballistic_limit.hpp"
#include "desurv/config.hpp"
#include "desurv/flux.hpp"
#include "desurv/polygon.hpp"

namespace desurv {

/// Fixed ejection half-angle used to size vulnerable zones, degrees.
inline constexpr double kMaxEjectionAngleDeg = 63.15;

/// Angles in degrees.
struct EjectaCone {
  double normal_axis = 0.0;     ///< theta_1
  double inline_axis = 0.0;     ///< theta_2
  double normal_spread = 0.0;   ///< psi_1
  double inline_spread = 0.0;   ///< psi_2
  double ejection_angle = 0.0;  ///< theta_2 + psi_2 / 2
};

/// theta in degrees; V and C in m/s; t is the wall thickness and D the
/// particle diameter.
EjectaCone ejecta_cone(double theta_deg, double velocity, double speed_of_sound, double thickness,
                       double particle_diameter);

/// Ejection angle for the ejecta extent, capped at kMaxEjectionAngleDeg.
double ejection_angle(double theta_deg, double velocity, double speed_of_sound, double thickness,
                      double particle_diameter);

/// 2 R_VZ for stand-off s, target size d and design particle size D.
double vulnerable_zone_extent(double standoff, double target_size, double max_particle_diameter);

/// d_ejecta for ejection angle alpha (deg).
double ejecta_extent(double alpha_deg, double standoff, double target_size);

bool face_visible(Vec3 face_normal, Vec3 direction);

double poisson_probability(double flux, double area, double years);

/// Coordinates of a face plane: u and v run along the two other body axes
/// in cyclic order (y,z for x faces; z,x for y faces; x,y for z faces).
struct FaceFrame {
  Face face = Face::kPosX;
  int axis = 0;
  int u_axis = 1;
  int v_axis = 2;
  double half_u = 0.0;
  double half_v = 0.0;
  double half_depth = 0.0;
};
FaceFrame face_frame(const Box& structure, Face face);

/// Cross-section of an object seen along the face normal, in face coordinates.
Polygon section_polygon(const ConfigObject& object, const FaceFrame& frame);
/// Exact area of that section (circles are not polygonised).
double section_area(const ConfigObject& object, const FaceFrame& frame);
/// Equivalent diameter 2 sqrt(A / pi).
double equivalent_diameter(double area);

struct VulnerableZone {
  Face face = Face::kPosX;
  double extent = 0.0;  ///< 2 R_VZ
  double standoff = 0.0;
  double target_size = 0.0;
  double max_particle_diameter = 0.0;
  Point2 centre;
  Polygon footprint;  ///< clipped to the face
  double footprint_area = 0.0;

  bool null() const { return !(footprint_area > 0.0); }
  /// Footprint area times |cos| of the incidence angle.
  double projected_area(Vec3 direction) const;
};

/// Throws desurv::Error("survivability", ...) when the component is not a
/// direct child of a box structure or pokes outside it.
VulnerableZone vulnerable_zone(const SpacecraftConfig& config, const ConfigObject& component, Face face,
                               double max_particle_diameter);

enum class ImpactRegime { kBallistic, kShatter, kHypervelocity };
ImpactRegime regime_of_velocity(double velocity);
/// Weight of the hypervelocity branch: 0 at or below 3 km/s, 1 at or above 7 km/s.
double hypervelocity_weight(double velocity);

/// Hypervelocity correction 1 - sum(d_shield) / d_ejecta, clamped to [0, 1].
/// The extents must already be projected onto the target plane.
double hypervelocity_correction(std::span<const double> projected_shield_extents, double ejecta_extent);
/// Shield extent projected from the face onto the target plane.
double projected_shield_extent(double shield_size, double target_standoff, double shield_standoff);
/// sqrt(A_v / A_target): equivalent visible length over the target size.
double ballistic_correction(double visible_area, double target_area);

struct Shield {
  int id = 0;
  double standoff = 0.0;
  Polygon projected;  ///< section projected onto the target plane and clipped to the face
};

/// Components between face f and the target whose projection overlaps the
/// target's zone footprint.
std::vector<Shield> select_shields(const SpacecraftConfig& config, const ConfigObject& target,
                                   const VulnerableZone& zone);

struct ShieldingCorrection {
  double hypervelocity = 1.0;
  double ballistic = 1.0;
  double visible_area = 0.0;
  double target_area = 0.0;
  int shield_count = 0;
};

/// Throws for a zero-area target section.
ShieldingCorrection shielding_correction(const Polygon& target_section, std::span<const Shield> shields,
                                         double ejecta_extent);

/// Blend of the ballistic and hypervelocity hit probabilities, clamped to [0, 1].
double component_hit_probability(double velocity, double particle_diameter, double ejecta_extent,
                                 double zone_extent, double target_size, const ShieldingCorrection& cf);

struct SurvivabilityOptions {
  double mission_years = 10.0;
  double vulnerable_max_diameter = 0.01;  ///< m
  double resistant_max_diameter = 0.02;   ///< m
  std::vector<int> resistant_components;
  /// Component ids entering the PNP sum; all direct components when empty.
  std::vector<int> scope;
  int azimuth_sectors = 12;
  int elevation_sectors = 6;
};

struct FaceImpact {
  Face face = Face::kPosX;
  int sector = 0;
  double incidence_deg = 0.0;
  double projected_area = 0.0;
  double critical_diameter = 0.0;
  double p_struct = 0.0;
  double p_comp = 0.0;
  double p_ble = 0.0;
  double cf_hyp = 1.0;
  double cf_ball = 1.0;
  double ejecta_extent = 0.0;
  int shield_count = 0;
  double probability = 0.0;
};

struct ComponentPenetration {
  int id = 0;
  std::string name;
  double probability = 0.0;
  std::vector<VulnerableZone> zones;
  std::vector<FaceImpact> impacts;
};

struct StructurePenetration {
  double probability = 0.0;
  std::vector<FaceImpact> impacts;
};

/// Wall of the box structure, shared by its six faces.
WallLayer structure_wall(const SpacecraftConfig& config);
/// Component wall: the shell thickness, or the smallest half-size for solids.
WallLayer component_wall(const ConfigObject& component);

StructurePenetration structure_penetration(const SpacecraftConfig& config, std::span<const VectorFluxElement> vfes,
                                           const FluxModel& model, double years, const BallisticLimit& ble);

ComponentPenetration component_penetration(const SpacecraftConfig& config, const ConfigObject& component,
                                           std::span<const VectorFluxElement> vfes, const FluxModel& model,
                                           double years, const BallisticLimit& ble,
                                           const SurvivabilityOptions& options = {});

/// 1 - sum of the component probabilities.
double pnp_index(std::span<const double> component_probabilities);

struct SurvivabilityReport {
  StructurePenetration structure;
  std::vector<ComponentPenetration> components;  ///< id order
  double pnp = 1.0;
  std::vector<std::string> warnings;
};

SurvivabilityReport assess_survivability(const SpacecraftConfig& config, const FluxModel& model,
                                         const BallisticLimit& ble, const SurvivabilityOptions& options = {});

std::string survivability_report_json(const SurvivabilityReport& report);

}  // namespace desurv
