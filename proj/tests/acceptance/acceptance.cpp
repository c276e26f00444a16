#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "desurv/aerothermo.hpp"
#include "desurv/mission.hpp"
#include "desurv/reentry.hpp"
#include "desurv/survivability.hpp"
#include "desurv/tank_design.hpp"
#include "probability_properties.hpp"

using namespace desurv;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

int failures = 0;

void criterion(int n, const char* name, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %2d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str(), s);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict propellant(const char* file, double expected) {
  const auto t0 = std::chrono::steady_clock::now();
  const SizingReport r = size_mission(read_mission(fs::path(DESURV_DATA_DIR) / "missions" / file));
  const double s = seconds_since(t0);
  const double err = std::abs(r.propellant_mass / expected - 1.0);
  return {err <= 0.10 && s < 1.0, fmt("m_f = %.1f kg vs %.0f kg (%.1f%%), %.3f s", r.propellant_mass, expected,
                                       100.0 * err, s)};
}

const char* material_short(int m) {
  static const char* names[] = {"Al", "Ti", "A316"};
  return names[m];
}

DesignContext class2000_context(int thickness_levels) {
  ContextOptions o;
  o.max_tanks = 3;
  o.thickness_levels = thickness_levels;
  o.entry = read_entry_conditions(DESURV_DATA_DIR "/entry/reference.json");
  return make_design_context(read_mission(DESURV_DATA_DIR "/missions/class2000_10yr.json"), synthetic_flux_model(),
                             o);
}

GAParams reference_ga(int workers = 1) {
  GAParams p;
  p.population = 80;
  p.generations = 60;
  p.crossover_probability = 0.9;
  p.mutation_probability = 0.05;
  p.seed = 42;
  p.workers = workers;
  return p;
}

std::vector<Fitness> fitness_of(const DesignOptimization& r) {
  std::vector<Fitness> f;
  for (const ParetoSolution& s : r.front) f.push_back(s.evaluation.fitness);
  return f;
}

bool pairwise_non_dominated(const std::vector<Fitness>& f) {
  for (const Fitness& a : f) {
    for (const Fitness& b : f) {
      if (dominates(a, b)) return false;
    }
  }
  return true;
}

// Hypervolume with the oracle front's worst values as the reference point.
double normalised_hypervolume(const std::vector<Fitness>& f, const std::vector<Fitness>& oracle) {
  Fitness ref{1.0, 1.0};
  for (const Fitness& x : oracle) ref = {std::min(ref[0], x[0]), std::min(ref[1], x[1])};
  return hypervolume(f, ref) / hypervolume(oracle, ref);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string pareto_csv(const DesignOptimization& r) {
  std::string csv;
  for (const ParetoSolution& s : r.front) {
    const DesignEvaluation& e = s.evaluation;
    csv += fmt("%.0f,%.0f,%.17g,%.17g", e.design.material, e.design.count, e.design.thickness, e.fitness[0]) +
           fmt(",%.17g,%.0f\n", e.fitness[1], e.design.shape == TankShape::kSphere ? 0.0 : 1.0);
  }
  return csv;
}

ObjectRun demise_run(double tolerance_scale) {
  const Material al = material_by_name("Al-6061-T6");
  const double mass = 5.0;
  const ReentryBody body = ReentryBody::from_shape(Sphere{0.05}, al, mass);
  EntryConditions e;
  SimulationOptions o;
  o.trace_interval = 0.0;
  o.integrator.abs_tol *= tolerance_scale;
  o.integrator.rel_tol *= tolerance_scale;
  return simulate_object(initial_state(e, mass), body, ReentryEnvironment{}, o);
}

}  // namespace

int main() {
  criterion(1, "MetOp propellant", [] { return propellant("metop.json", 360.0); });
  criterion(2, "CryoSat-2 propellant", [] { return propellant("cryosat2.json", 43.0); });

  criterion(3, "structure sizing", [] {
    const double mass[] = {500, 1000, 2000, 4000};
    const double expected[] = {1.710, 2.154, 2.714, 3.420};
    const double published[] = {1.7, 2.15, 2.7, 3.4};
    const int digits[] = {1, 2, 1, 1};
    bool ok = true, rounded = true;
    std::string d;
    for (int i = 0; i < 4; ++i) {
      const double side = structure_side(mass[i]);
      const double scale = std::pow(10.0, digits[i]);
      ok = ok && std::abs(side - expected[i]) <= 0.01;
      rounded = rounded && std::round(side * scale) / scale == published[i];
      d += fmt("%.0f kg -> %.3f m, ", mass[i], side);
    }
    d += rounded ? "all round to the printed table" : "some differ from the printed table after rounding";
    return Verdict{ok && rounded, d};
  });

  criterion(4, "Hohmann 600 to 800 km", [] {
    const double r1 = kMissionEarthRadius + 600e3, r2 = kMissionEarthRadius + 800e3;
    const double dv = hohmann_delta_v(r1, r2);
    const double oracle = std::sqrt(kEarthMu / r1) * (std::sqrt(2.0 * r2 / (r1 + r2)) - 1.0) +
                          std::sqrt(kEarthMu / r2) * (1.0 - std::sqrt(2.0 * r1 / (r1 + r2)));
    return Verdict{std::abs(dv - 106.0) <= 1.0 && std::abs(dv - oracle) < 1e-9,
                   fmt("%.3f m/s (closed form %.3f m/s)", dv, oracle)};
  });

  criterion(5, "vulnerable zone extent", [] {
    const double ext = vulnerable_zone_extent(0.1, 0.5, 10e-3);
    const double oracle = 2.0 * (std::tan(63.15 * std::numbers::pi / 180.0) * 0.1 + 0.5 * (0.5 + 0.01));
    return Verdict{std::abs(ext - 0.905) <= 0.001, fmt("2R = %.4f m (hand %.4f m)", ext, oracle)};
  });

  criterion(6, "probability algebra properties", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const testing::PropertyReport r = testing::ProbabilityProperties(20260415).run(1000);
    const double s = seconds_since(t0);
    std::string d = fmt("%.0f cases, %.0f checks, %.0f failures", r.cases, r.checks,
                        static_cast<double>(r.failures.size()));
    if (!r.ok()) d += "; first: " + r.failures.front();
    return Verdict{r.ok() && r.cases >= 1000 && s < 30.0, d};
  });

  criterion(7, "integrator fidelity", [] {
    ReentryEnvironment env;
    env.atmosphere = AtmosphereModel::vacuum();
    env.gravity = GravityConstants::spherical_nonrotating();
    EntryConditions e;
    e.altitude = 400e3;
    const double r0 = env.gravity.earth_radius + e.altitude;
    e.velocity = std::sqrt(env.gravity.mu / r0);
    e.flight_path_angle = 0.0;
    const Material al = material_by_name("Al-6061-T6");
    const ReentryBody body = ReentryBody::from_shape(Sphere{0.5}, al, 100.0);
    SimulationOptions o;
    o.max_time = 2.0 * std::numbers::pi * r0 / e.velocity;
    o.trace_interval = 10.0;
    const ObjectRun run = simulate_object(initial_state(e, 100.0), body, env, o);
    double worst = std::abs(run.fate.final_state.radius / r0 - 1.0);
    for (const TracePoint& p : run.trace) {
      worst = std::max(worst, std::abs((p.altitude + env.gravity.earth_radius) / r0 - 1.0));
    }

    // Eccentric orbit from 1% above circular speed: apoapsis and return after one period from vis-viva.
    EntryConditions fast = e;
    fast.velocity *= 1.01;
    const double a_sma = 1.0 / (2.0 / r0 - fast.velocity * fast.velocity / env.gravity.mu);
    const double apo = 2.0 * a_sma - r0;
    o.max_time = 2.0 * std::numbers::pi * std::sqrt(a_sma * a_sma * a_sma / env.gravity.mu);
    o.trace_interval = 1.0;
    const ObjectRun ecc = simulate_object(initial_state(fast, 100.0), body, env, o);
    double top = 0.0;
    for (const TracePoint& p : ecc.trace) top = std::max(top, p.altitude + env.gravity.earth_radius);
    const double apo_err = std::abs(top / apo - 1.0);
    const double return_err = std::abs(ecc.fate.final_state.radius / r0 - 1.0);

    const ObjectRun a = demise_run(1.0), b = demise_run(0.5);
    const bool demised = a.fate.outcome == Outcome::kDemised && b.fate.outcome == Outcome::kDemised;
    const double change = std::abs(b.fate.demise_altitude / a.fate.demise_altitude - 1.0);
    std::string d = fmt("circular radius deviation %.2e; eccentric apoapsis error %.2e, return error %.2e", worst,
                        apo_err, return_err);
    d += fmt("; demise altitude %.1f m vs %.1f m (%.2e)", a.fate.demise_altitude, b.fate.demise_altitude, change);
    return Verdict{worst < 1e-3 && apo_err < 1e-4 && return_err < 1e-4 && demised && change < 5e-3, d};
  });

  criterion(8, "optimiser against brute force", [] {
    const DesignContext ctx = class2000_context(25);
    std::vector<Fitness> all;
    for (const DesignEvaluation& e : enumerate_designs(ctx, 25, 4)) all.push_back(e.fitness);
    std::vector<Fitness> oracle;
    for (std::size_t i : non_dominated_subset(all)) oracle.push_back(all[i]);
    const DesignOptimization r = optimize_design(ctx, reference_ga(4));
    const std::vector<Fitness> front = fitness_of(r);
    const double ratio = hypervolume(front) / hypervolume(oracle);
    std::size_t found = 0;
    for (const Fitness& o : oracle) {
      const bool hit = std::any_of(front.begin(), front.end(), [&](const Fitness& f) {
        return std::abs(f[0] - o[0]) <= 1e-9 && std::abs(f[1] - o[1]) <= 1e-9;
      });
      found += hit ? 1 : 0;
    }
    const bool nd = pairwise_non_dominated(front);
    std::string d = fmt("HV ratio %.6f, normalised HV ratio %.6f, final population HV %.6f", ratio,
                        normalised_hypervolume(front, oracle), r.log.back().hypervolume);
    d += fmt(", %.0f of %.0f oracle points, %.0f evaluations", static_cast<double>(found),
             static_cast<double>(oracle.size()), static_cast<double>(r.evaluations));
    d += nd ? ", front non-dominated" : ", front has dominated points";
    return Verdict{ratio >= 0.95 && nd, d};
  });

  criterion(9, "Pareto front structure", [] {
    const DesignContext ctx = class2000_context(0);
    const DesignOptimization r = optimize_design(ctx, reference_ga(4));
    if (r.front.empty()) return Verdict{false, "empty front"};
    bool titanium = false, all_cylinders = true;
    const DesignEvaluation* max_lmf = &r.front.front().evaluation;
    const DesignEvaluation* max_pnp = max_lmf;
    for (const ParetoSolution& s : r.front) {
      const DesignEvaluation& e = s.evaluation;
      titanium = titanium || e.design.material == 1;
      all_cylinders = all_cylinders && e.design.shape == TankShape::kCylinder;
      if (e.fitness[1] > max_lmf->fitness[1]) max_lmf = &e;
      if (e.fitness[0] > max_pnp->fitness[0]) max_pnp = &e;
    }
    std::string d = fmt("%.0f solutions", static_cast<double>(r.front.size()));
    d += std::string(", titanium ") + (titanium ? "present" : "absent");
    d += std::string(", max LMF ") + material_short(max_lmf->design.material);
    d += std::string(", max PNP ") + material_short(max_pnp->design.material);
    d += std::string(", all cylindrical (informational) ") + (all_cylinders ? "yes" : "no");
    return Verdict{!titanium && max_lmf->design.material == 0 && max_pnp->design.material == 2, d};
  });

  criterion(10, "determinism across worker counts", [] {
    const DesignContext ctx = class2000_context(0);
    GAParams p = reference_ga(1);
    p.generations = 20;
    const std::string one = pareto_csv(optimize_design(ctx, p));
    p.workers = 4;
    const std::string four = pareto_csv(optimize_design(ctx, p));

    const fs::path dir = fs::temp_directory_path() / "desurv-acceptance";
    fs::remove_all(dir);
    const std::string base = std::string("\"") + DESURV_CLI + "\" optimize --mission \"" DESURV_DATA_DIR
                             "/missions/class2000_10yr.json\" --gens 20 --seed 7";
    const int rc1 = std::system((base + " --workers 1 --out \"" + (dir / "w1").string() + "\" > /dev/null").c_str());
    const int rc2 = std::system((base + " --workers 3 --out \"" + (dir / "w3").string() + "\" > /dev/null").c_str());
    const std::string c1 = slurp(dir / "w1" / "pareto.csv"), c3 = slurp(dir / "w3" / "pareto.csv");
    fs::remove_all(dir);
    const bool cli_ok = rc1 == 0 && rc2 == 0 && !c1.empty() && c1 == c3;
    return Verdict{one == four && !one.empty() && cli_ok,
                   std::string("in-process fronts ") + (one == four ? "identical" : "differ") + ", CLI pareto.csv " +
                       (cli_ok ? "byte-identical" : "differs or missing")};
  });

  return failures == 0 ? 0 : 1;
}
