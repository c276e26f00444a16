#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "desurv/ballistic_limit.hpp"
#include "desurv/config.hpp"
#include "desurv/flux.hpp"
#include "desurv/mission.hpp"
#include "desurv/nsga2.hpp"
#include "desurv/reentry.hpp"
#include "desurv/survivability.hpp"

namespace desurv {

/// Tank materials in gene order: Al-6061-T6, Ti-6Al-4V, A316.
const std::array<Material, 3>& design_materials();

inline constexpr double kMinTankThickness = 0.5e-3;
inline constexpr double kMaxTankThickness = 5e-3;

struct TankDesign {
  int material = 0;
  int count = 1;
  double thickness = 1e-3;  ///< m
  TankShape shape = TankShape::kSphere;

  auto operator<=>(const TankDesign&) const = default;
};

/// Everything shared by all design evaluations. Immutable once built.
struct DesignContext {
  MissionSpec mission;
  FluxModel flux;
  std::vector<VectorFluxElement> vfes;
  std::shared_ptr<const BallisticLimit> ble;
  double propellant_mass = 0.0;
  double structure_side = 0.0;
  double structure_wall = 3e-3;
  Material structure_material;
  /// Tank materials indexed by the material gene.
  std::array<Material, 3> materials = design_materials();
  EntryConditions entry;
  ReentryEnvironment environment;
  ReentryOptions reentry;
  SurvivabilityOptions survivability;
  int max_tanks = 6;
  /// Thickness levels between 0.5 and 5 mm; 0 keeps the thickness continuous.
  int thickness_levels = 0;
};

struct ContextOptions {
  int max_tanks = 6;
  int thickness_levels = 0;
  int azimuth_sectors = 12;
  int elevation_sectors = 6;
  double breakup_altitude = 78e3;
  EntryConditions entry;
  std::shared_ptr<const BallisticLimit> ble;  ///< default power-law model when null
};

/// Sizes the propellant and the cube structure from the mission.
DesignContext make_design_context(const MissionSpec& mission, FluxModel flux, const ContextOptions& options = {});

/// Real-coded genome: material, count, thickness in mm, shape.
Bounds design_bounds(const DesignContext& ctx);
/// Rounds and clamps the integer genes, snaps the thickness to the level grid
/// when one is set.
Genome decode_genome(const DesignContext& ctx, const Genome& raw);
TankDesign to_design(const Genome& decoded);
Genome to_genome(const TankDesign& d);

/// Cube structure (id 1) with the tanks as its direct components (ids 2..).
SpacecraftConfig design_configuration(const DesignContext& ctx, const TankDesign& design, const TankLayout& layout);

inline constexpr Fitness kInfeasibleFitness = {-1.0, -1.0};

struct DesignEvaluation {
  TankDesign design;
  Fitness fitness = kInfeasibleFitness;  ///< (PNP, LMF)
  bool fits = false;
  std::string error;
  double mass_ratio = 0.0;         ///< tank assembly mass / propellant mass
  double max_pressure = 0.0;       ///< Pa
  double worst_impact_energy = 0.0;  ///< J, largest among surviving tanks
  double structure_probability = 0.0;
  std::vector<double> tank_probabilities;
  std::vector<ObjectFate> tank_fates;

  bool mass_ratio_typical() const { return mass_ratio >= 0.1 && mass_ratio <= 0.2; }
  bool pressure_typical() const { return typical_pressure(max_pressure); }
  bool low_energy() const { return worst_impact_energy < 15.0; }
};

/// Pure; model errors produce the infeasible sentinel with `error` set.
DesignEvaluation evaluate_design(const DesignContext& ctx, const TankDesign& design);

Problem design_problem(const DesignContext& ctx);

/// Thickness level k of n, evenly spaced from 0.5 to 5 mm.
double thickness_level(int k, int n);

/// Every design on the discrete grid (materials x shapes x counts x levels).
std::vector<DesignEvaluation> enumerate_designs(const DesignContext& ctx, int thickness_levels, int workers = 1);

struct ParetoSolution {
  DesignEvaluation evaluation;
  int rank = 1;
  double crowding = 0.0;
};

struct DesignOptimization {
  std::vector<ParetoSolution> front;  ///< PNP ascending
  std::vector<GenerationLog> log;
  std::size_t evaluations = 0;
};

DesignOptimization optimize_design(const DesignContext& ctx, const GAParams& params);

}  // namespace desurv
