#include "desurv/tank_design.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "desurv/error.hpp"

namespace desurv {
namespace {

constexpr double kGeneMargin = 0.5 - 1e-9;

template <class F>
void parallel_for(std::size_t n, int workers, F&& f) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = static_cast<std::size_t>(w); i < n; i += static_cast<std::size_t>(workers)) f(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

const std::array<Material, 3>& design_materials() {
  static const std::array<Material, 3> kMaterials = {material_by_name("Al-6061-T6"), material_by_name("Ti-6Al-4V"),
                                                     material_by_name("A316")};
  return kMaterials;
}

DesignContext make_design_context(const MissionSpec& mission, FluxModel flux, const ContextOptions& o) {
  validate(mission);
  if (o.max_tanks < 1 || o.max_tanks > 6) throw Error("nsga2", "maximum tank count must be in [1, 6]");
  if (o.thickness_levels == 1 || o.thickness_levels < 0) throw Error("nsga2", "thickness levels must be 0 or >= 2");
  DesignContext c;
  c.mission = mission;
  c.vfes = build_vector_flux_elements(flux, o.azimuth_sectors, o.elevation_sectors);
  c.flux = std::move(flux);
  c.ble = o.ble ? o.ble : std::make_shared<PowerLawBle>();
  const SizingReport sizing = size_mission(mission);
  c.propellant_mass = sizing.propellant_mass;
  c.structure_side = sizing.structure_side;
  c.structure_material = material_by_name("Al-6061-T6");
  c.entry = o.entry;
  c.reentry.breakup_altitude = o.breakup_altitude;
  c.reentry.simulation.trace_interval = 0.0;
  c.survivability.mission_years = mission.lifetime_years;
  c.survivability.azimuth_sectors = o.azimuth_sectors;
  c.survivability.elevation_sectors = o.elevation_sectors;
  c.max_tanks = o.max_tanks;
  c.thickness_levels = o.thickness_levels;
  return c;
}

Bounds design_bounds(const DesignContext& ctx) {
  return {{-kGeneMargin, 1.0 - kGeneMargin, kMinTankThickness * 1e3, -kGeneMargin},
          {2.0 + kGeneMargin, ctx.max_tanks + kGeneMargin, kMaxTankThickness * 1e3, 1.0 + kGeneMargin}};
}

double thickness_level(int k, int n) {
  if (n < 2) throw Error("nsga2", "need at least two thickness levels");
  return kMinTankThickness + (kMaxTankThickness - kMinTankThickness) * k / (n - 1);
}

Genome decode_genome(const DesignContext& ctx, const Genome& raw) {
  if (raw.size() != 4) throw Error("nsga2", "tank genome must have 4 genes");
  Genome g(4);
  g[0] = std::clamp(std::round(raw[0]), 0.0, 2.0);
  g[1] = std::clamp(std::round(raw[1]), 1.0, static_cast<double>(ctx.max_tanks));
  g[2] = std::clamp(raw[2], kMinTankThickness * 1e3, kMaxTankThickness * 1e3);
  if (ctx.thickness_levels >= 2) {
    const double step = (kMaxTankThickness - kMinTankThickness) * 1e3 / (ctx.thickness_levels - 1);
    const int k = static_cast<int>(std::lround((g[2] - kMinTankThickness * 1e3) / step));
    g[2] = thickness_level(std::clamp(k, 0, ctx.thickness_levels - 1), ctx.thickness_levels) * 1e3;
  }
  g[3] = std::clamp(std::round(raw[3]), 0.0, 1.0);
  return g;
}

TankDesign to_design(const Genome& g) {
  return {static_cast<int>(g[0]), static_cast<int>(g[1]), g[2] * 1e-3,
          g[3] == 0.0 ? TankShape::kSphere : TankShape::kCylinder};
}

Genome to_genome(const TankDesign& d) {
  return {static_cast<double>(d.material), static_cast<double>(d.count), d.thickness * 1e3,
          d.shape == TankShape::kSphere ? 0.0 : 1.0};
}

SpacecraftConfig design_configuration(const DesignContext& ctx, const TankDesign& design, const TankLayout& layout) {
  std::vector<ConfigObject> objects;
  ConfigObject s;
  s.id = 1;
  s.name = "structure";
  s.shape = Box{ctx.structure_side, ctx.structure_side, ctx.structure_side};
  s.mass = ctx.mission.mass;
  s.material = ctx.structure_material;
  s.wall_thickness = ctx.structure_wall;
  s.role = Role::kStructure;
  objects.push_back(s);
  const Material& m = ctx.materials.at(static_cast<std::size_t>(design.material));
  for (int k = 0; k < layout.count; ++k) {
    ConfigObject t;
    t.id = 2 + k;
    t.name = "tank#" + std::to_string(k + 1);
    t.parent = 1;
    if (design.shape == TankShape::kSphere) {
      t.shape = Sphere{layout.outer_radius};
    } else {
      t.shape = Cylinder{2.0 * layout.outer_radius, 2.0 * layout.outer_radius};
    }
    t.mass = layout.shell_mass;
    t.material = m;
    t.wall_thickness = design.thickness;
    t.role = Role::kComponent;
    t.position = layout.centres[static_cast<std::size_t>(k)];
    objects.push_back(t);
  }
  return SpacecraftConfig::build(std::move(objects));
}

DesignEvaluation evaluate_design(const DesignContext& ctx, const TankDesign& design) {
  DesignEvaluation ev;
  ev.design = design;
  try {
    if (design.material < 0 || design.material > 2) throw Error("nsga2", "material index outside [0, 2]");
    if (design.count < 1 || design.count > ctx.max_tanks) throw Error("nsga2", "tank count outside bounds");
    const Material& mat = ctx.materials[static_cast<std::size_t>(design.material)];
    const TankLayout layout =
        tank_layout(ctx.propellant_mass, ctx.mission, design.count, design.shape, design.thickness,
                    ctx.structure_side, mat);
    ev.fits = true;
    ev.mass_ratio = ctx.propellant_mass > 0.0 ? layout.assembly_mass / ctx.propellant_mass : 0.0;
    ev.max_pressure = layout.max_pressure;
    const SpacecraftConfig config = design_configuration(ctx, design, layout);

    const StructurePenetration sp =
        structure_penetration(config, ctx.vfes, ctx.flux, ctx.survivability.mission_years, *ctx.ble);
    ev.structure_probability = sp.probability;
    std::vector<int> tank_ids;
    for (const ConfigObject* t : config.children(1)) {
      tank_ids.push_back(t->id);
      const ComponentPenetration cp = component_penetration(config, *t, ctx.vfes, ctx.flux,
                                                            ctx.survivability.mission_years, *ctx.ble,
                                                            ctx.survivability);
      ev.tank_probabilities.push_back(cp.probability);
    }
    const double pnp = pnp_index(ev.tank_probabilities);

    const ReentryReport report = simulate_reentry(config, ctx.entry, ctx.environment, ctx.reentry);
    for (const ObjectRun& run : report.objects) {
      if (std::find(tank_ids.begin(), tank_ids.end(), run.fate.id) == tank_ids.end()) continue;
      if (run.fate.outcome == Outcome::kFailed) {
        throw Error("demise", "tank " + std::to_string(run.fate.id) + ": " + run.fate.error);
      }
      if (run.fate.outcome != Outcome::kDemised) {
        ev.worst_impact_energy = std::max(ev.worst_impact_energy, run.fate.impact_energy);
      }
      ev.tank_fates.push_back(run.fate);
    }
    const double lmf = liquid_mass_fraction(report, tank_ids);
    ev.fitness = {pnp, lmf};
  } catch (const Error& e) {
    ev.fitness = kInfeasibleFitness;
    ev.error = e.what();
  }
  return ev;
}

Problem design_problem(const DesignContext& ctx) {
  Problem p;
  p.bounds = design_bounds(ctx);
  p.decode = [&ctx](const Genome& g) { return decode_genome(ctx, g); };
  p.evaluate = [&ctx](const Genome& g) { return evaluate_design(ctx, to_design(g)).fitness; };
  return p;
}

std::vector<DesignEvaluation> enumerate_designs(const DesignContext& ctx, int levels, int workers) {
  std::vector<TankDesign> designs;
  for (int m = 0; m < 3; ++m) {
    for (TankShape s : {TankShape::kSphere, TankShape::kCylinder}) {
      for (int n = 1; n <= ctx.max_tanks; ++n) {
        for (int k = 0; k < levels; ++k) {
          // Through the genome so the thickness matches what the optimiser evaluates bit for bit.
          designs.push_back(to_design(to_genome({m, n, thickness_level(k, levels), s})));
        }
      }
    }
  }
  std::vector<DesignEvaluation> out(designs.size());
  parallel_for(designs.size(), workers, [&](std::size_t i) { out[i] = evaluate_design(ctx, designs[i]); });
  return out;
}

DesignOptimization optimize_design(const DesignContext& ctx, const GAParams& params) {
  const Problem problem = design_problem(ctx);
  const OptimizationResult r = nsga2(problem, params);
  DesignOptimization out;
  out.log = r.log;
  out.evaluations = r.evaluations;
  std::vector<ParetoSolution> front(r.front.size());
  parallel_for(front.size(), params.workers, [&](std::size_t i) {
    front[i].evaluation = evaluate_design(ctx, to_design(r.front[i].genome));
    front[i].rank = r.front[i].rank;
    front[i].crowding = r.front[i].crowding;
  });
  for (ParetoSolution& s : front) {
    if (s.evaluation.fits && s.evaluation.error.empty()) out.front.push_back(std::move(s));
  }
  return out;
}

}  // namespace desurv
