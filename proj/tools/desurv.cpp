// desurv: re-entry demise, debris survivability, mission sizing and tank
// design optimisation from the command line.

#include <CLI11.hpp>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "desurv/ballistic_limit.hpp"
#include "desurv/config.hpp"
#include "desurv/error.hpp"
#include "desurv/flux.hpp"
#include "desurv/mission.hpp"
#include "desurv/reentry.hpp"
#include "desurv/survivability.hpp"
#include "desurv/tank_design.hpp"
#include "desurv/text_table.hpp"
#include "desurv/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// Thrown for argument problems detected after CLI11 parsing (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::string subcommand;
  std::uint64_t seed = 42;
  std::map<std::string, std::string> digests;  // ordered for stable output

  void add_file(const std::string& label, const fs::path& p) {
    digests[label] = desurv::hex_digest(desurv::read_file(p, "cli"));
  }

  std::string csv_header() const {
    std::string h = "# desurv " + std::string(desurv::kVersion) + " " + subcommand + " seed=" + std::to_string(seed);
    for (const auto& [k, v] : digests) h += " " + k + "=" + v;
    return h + "\n";
  }

  json provenance() const {
    json j{{"tool", "desurv"}, {"version", desurv::kVersion}, {"subcommand", subcommand}, {"seed", seed}};
    j["inputs"] = json::object();
    for (const auto& [k, v] : digests) j["inputs"][k] = v;
    return j;
  }
};

// Output files are gathered in memory and written only once every result is
// ready, so a failing run leaves nothing behind.
class OutputSet {
 public:
  void add(fs::path relative, std::string content) { files_.emplace_back(std::move(relative), std::move(content)); }

  void write(const fs::path& dir) const {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw desurv::Error("cli", "cannot create output directory " + dir.string() + ": " + ec.message());
    for (const auto& [rel, content] : files_) {
      const fs::path p = dir / rel;
      fs::create_directories(p.parent_path(), ec);
      std::ofstream out(p, std::ios::binary);
      if (!out) throw desurv::Error("cli", "cannot write " + p.string());
      out << content;
    }
  }

 private:
  std::vector<std::pair<fs::path, std::string>> files_;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::pair<int, int> parse_sectors(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw UsageError("--sectors must look like AZxEL, e.g. 12x6");
  try {
    std::size_t used_a = 0, used_e = 0;
    const int az = std::stoi(text.substr(0, x), &used_a);
    const int el = std::stoi(text.substr(x + 1), &used_e);
    if (used_a != x || used_e != text.size() - x - 1 || az < 1 || el < 1) throw std::invalid_argument(text);
    return {az, el};
  } catch (const std::logic_error&) {
    throw UsageError("--sectors must look like AZxEL with positive integers, got '" + text + "'");
  }
}

desurv::FluxModel load_flux(const std::string& dir, Inputs& in) {
  if (dir.empty()) {
    in.digests["flux"] = "builtin-synthetic";
    return desurv::synthetic_flux_model();
  }
  in.add_file("flux_directional", fs::path(dir) / "directional.csv");
  in.add_file("flux_diameter", fs::path(dir) / "diameter.csv");
  return desurv::load_flux_directory(dir);
}

json fate_json(const desurv::ObjectFate& f) {
  json j{{"id", f.id},
         {"name", f.name},
         {"outcome", desurv::to_string(f.outcome)},
         {"initial_mass_kg", f.initial_mass},
         {"final_mass_kg", f.final_mass},
         {"flight_time_s", f.flight_time},
         {"steps", f.steps},
         {"final_cross_section_m2", f.final_cross_section},
         {"impact_energy_J", f.impact_energy},
         {"landing_latitude_deg", f.landing_latitude / kDeg},
         {"landing_longitude_deg", f.landing_longitude / kDeg}};
  if (f.outcome == desurv::Outcome::kDemised) j["demise_altitude_km"] = f.demise_altitude / 1e3;
  if (!f.error.empty()) j["error"] = f.error;
  return j;
}

std::string safe_name(std::string s) {
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  }
  return s;
}

int run_reentry(const std::string& config_path, const std::string& entry_path, const std::string& out_dir,
                std::optional<double> breakup_km, Inputs& in) {
  in.add_file("config", config_path);
  const desurv::SpacecraftConfig config = desurv::read_configuration(config_path);
  desurv::EntryConditions entry;
  if (!entry_path.empty()) {
    in.add_file("entry", entry_path);
    entry = desurv::read_entry_conditions(entry_path);
  }
  desurv::ReentryOptions options;
  if (breakup_km) options.breakup_altitude = *breakup_km * 1e3;
  const desurv::ReentryReport report = desurv::simulate_reentry(config, entry, {}, options);

  OutputSet out;
  json j;
  j["provenance"] = in.provenance();
  j["breakup_altitude_km"] = options.breakup_altitude / 1e3;
  j["liquid_mass_fraction"] = desurv::liquid_mass_fraction(report);
  j["events"] = json::array();
  for (const auto& e : report.parent.events) {
    j["events"].push_back(
        {{"kind", desurv::to_string(e.kind)}, {"time_s", e.time}, {"altitude_km", e.altitude / 1e3}, {"released", e.released}});
  }
  j["objects"] = json::array();
  for (const auto& run : report.objects) {
    j["objects"].push_back(fate_json(run.fate));
    out.add(fs::path("traces") / (std::to_string(run.fate.id) + "_" + safe_name(run.fate.name) + ".csv"),
            in.csv_header() + desurv::trace_to_csv(run.trace));
  }
  out.add("parent_trace.csv", in.csv_header() + desurv::trace_to_csv(report.parent.trace));
  out.add("reentry.json", j.dump(2) + "\n");
  out.write(out_dir);
  std::printf("LMF %.6f over %zu objects\n", j["liquid_mass_fraction"].get<double>(), report.objects.size());
  return 0;
}

int run_survive(const std::string& config_path, const std::string& flux_dir, const std::string& ble_path,
                double years, const std::string& sectors, const std::string& out_dir, Inputs& in) {
  in.add_file("config", config_path);
  const desurv::SpacecraftConfig config = desurv::read_configuration(config_path);
  const desurv::FluxModel flux = load_flux(flux_dir, in);
  if (!ble_path.empty()) in.add_file("ble", ble_path);
  const auto ble = desurv::make_ballistic_limit(ble_path);
  desurv::SurvivabilityOptions opt;
  opt.mission_years = years;
  std::tie(opt.azimuth_sectors, opt.elevation_sectors) = parse_sectors(sectors);
  const desurv::SurvivabilityReport report = desurv::assess_survivability(config, flux, *ble, opt);

  json j = json::parse(desurv::survivability_report_json(report));
  j["provenance"] = in.provenance();
  j["mission_years"] = years;
  OutputSet out;
  out.add("survivability.json", j.dump(2) + "\n");
  out.write(out_dir);
  for (const auto& w : report.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("PNP %.8f structure P_p %.8f\n", report.pnp, report.structure.probability);
  return 0;
}

int run_size(const std::string& mission_path, const std::string& out_dir, Inputs& in) {
  in.add_file("mission", mission_path);
  const desurv::MissionSpec mission = desurv::read_mission(mission_path);
  const desurv::SizingReport report = desurv::size_mission(mission);
  json j = json::parse(desurv::sizing_report_json(report));
  j["provenance"] = in.provenance();
  OutputSet out;
  out.add("sizing.json", j.dump(2) + "\n");
  out.write(out_dir);
  std::printf("delta-V %.3f m/s, propellant %.3f kg, tankage %.4f m^3, structure side %.3f m\n", report.budget.total,
              report.propellant_mass, report.tankage_volume, report.structure_side);
  return 0;
}

struct OptimizeArgs {
  std::string mission, flux_dir, entry, out, sectors = "12x6", ble;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_tanks, pop, gens, workers, levels;
  std::optional<double> breakup_km;
};

std::string flags_of(const desurv::DesignEvaluation& e) {
  std::string f;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!f.empty()) f += "|";
    f += name;
  };
  add(e.mass_ratio_typical(), "mass_ratio");
  add(e.pressure_typical(), "pressure");
  add(e.low_energy(), "energy");
  return f.empty() ? "none" : f;
}

int run_optimize(const OptimizeArgs& a, Inputs& in) {
  in.add_file("mission", a.mission);
  const desurv::MissionSpec mission = desurv::read_mission(a.mission);
  // Optional "optimizer" block in the mission file; flags take precedence.
  const json mj = json::parse(desurv::read_file(a.mission, "cli"));
  const json ocfg = mj.value("optimizer", json::object());
  auto pick = [&](const std::optional<int>& flag, const char* key, int fallback) {
    if (flag) return *flag;
    if (ocfg.contains(key)) {
      if (!ocfg[key].is_number_integer()) throw desurv::Error("cli", std::string("optimizer.") + key + " must be an integer");
      return ocfg[key].get<int>();
    }
    return fallback;
  };
  desurv::GAParams ga;
  ga.population = pick(a.pop, "population", ga.population);
  ga.generations = pick(a.gens, "generations", ga.generations);
  ga.workers = a.workers.value_or(1);
  ga.seed = a.seed ? *a.seed : ocfg.value("seed", std::uint64_t{42});
  if (ocfg.contains("crossover_probability")) ga.crossover_probability = ocfg["crossover_probability"].get<double>();
  if (ocfg.contains("mutation_probability")) ga.mutation_probability = ocfg["mutation_probability"].get<double>();
  in.seed = ga.seed;
  try {
    desurv::validate(ga);
  } catch (const desurv::Error& e) {
    throw UsageError(e.what());
  }

  desurv::ContextOptions co;
  co.max_tanks = pick(a.max_tanks, "max_tanks", 6);
  co.thickness_levels = pick(a.levels, "thickness_levels", 0);
  std::tie(co.azimuth_sectors, co.elevation_sectors) = parse_sectors(a.sectors);
  if (a.breakup_km) co.breakup_altitude = *a.breakup_km * 1e3;
  if (!a.entry.empty()) {
    in.add_file("entry", a.entry);
    co.entry = desurv::read_entry_conditions(a.entry);
  }
  if (!a.ble.empty()) {
    in.add_file("ble", a.ble);
    co.ble = std::shared_ptr<const desurv::BallisticLimit>(desurv::make_ballistic_limit(a.ble));
  }
  desurv::FluxModel flux = load_flux(a.flux_dir, in);
  const desurv::DesignContext ctx = desurv::make_design_context(mission, std::move(flux), co);
  const desurv::DesignOptimization result = desurv::optimize_design(ctx, ga);
  if (result.front.empty()) throw desurv::Error("nsga2", "no feasible design found");

  std::string csv = in.csv_header();
  csv += "material,shape,n_tanks,thickness_mm,PNP_pct,LMF_pct,mass_ratio,p_max_MPa,impact_energy_J,feasible_flags\n";
  json front = json::array();
  for (const auto& s : result.front) {
    const auto& e = s.evaluation;
    const std::string mat = desurv::design_materials()[static_cast<std::size_t>(e.design.material)].name;
    const std::string shape(desurv::to_string(e.design.shape));
    csv += mat + "," + shape + "," + std::to_string(e.design.count) + "," + fmt(e.design.thickness * 1e3) + "," +
           fmt(100.0 * e.fitness[0]) + "," + fmt(100.0 * e.fitness[1]) + "," + fmt(e.mass_ratio) + "," +
           fmt(e.max_pressure / 1e6) + "," + fmt(e.worst_impact_energy) + "," + flags_of(e) + "\n";
    json fates = json::array();
    for (const auto& f : e.tank_fates) fates.push_back(fate_json(f));
    front.push_back({{"material", mat},
                     {"shape", shape},
                     {"n_tanks", e.design.count},
                     {"thickness_m", e.design.thickness},
                     {"pnp", e.fitness[0]},
                     {"lmf", e.fitness[1]},
                     {"rank", s.rank},
                     {"crowding", std::isfinite(s.crowding) ? json(s.crowding) : json("inf")},
                     {"mass_ratio", e.mass_ratio},
                     {"p_max_Pa", e.max_pressure},
                     {"worst_impact_energy_J", e.worst_impact_energy},
                     {"structure_penetration", e.structure_probability},
                     {"tank_penetration", e.tank_probabilities},
                     {"tank_fates", fates},
                     {"flags",
                      {{"fits", e.fits},
                       {"mass_ratio_typical", e.mass_ratio_typical()},
                       {"pressure_typical", e.pressure_typical()},
                       {"low_energy", e.low_energy()}}}});
  }
  std::string log = in.csv_header() + "gen,front_size,hypervolume,best_PNP,best_LMF\n";
  for (const auto& g : result.log) {
    log += std::to_string(g.generation) + "," + std::to_string(g.front_size) + "," + fmt(g.hypervolume) + "," +
           fmt(g.best_first) + "," + fmt(g.best_second) + "\n";
  }
  json j{{"provenance", in.provenance()},
         {"propellant_mass_kg", ctx.propellant_mass},
         {"structure_side_m", ctx.structure_side},
         {"ga",
          {{"population", ga.population},
           {"generations", ga.generations},
           {"crossover_probability", ga.crossover_probability},
           {"mutation_probability", ga.mutation_probability},
           {"eta_crossover", ga.eta_crossover},
           {"eta_mutation", ga.eta_mutation},
           {"max_tanks", co.max_tanks},
           {"thickness_levels", co.thickness_levels}}},
         {"evaluations", result.evaluations},
         {"front", front}};

  OutputSet out;
  out.add("pareto.csv", csv);
  out.add("pareto.json", j.dump(2) + "\n");
  out.add("generations.csv", log);
  out.write(a.out);
  std::printf("front of %zu designs from %zu evaluations\n", result.front.size(), result.evaluations);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spacecraft demisability and survivability toolkit"};
  app.set_version_flag("--version", std::string(desurv::kVersion));
  app.require_subcommand(1);

  Inputs in;
  std::string config, entry, out, flux_dir, ble, mission, sectors = "12x6";
  std::uint64_t seed = 42;
  double years = 10.0;
  std::optional<double> breakup_km;
  OptimizeArgs oa;

  auto* re = app.add_subcommand("reentry", "re-entry demise of a spacecraft configuration");
  re->add_option("--config", config, "configuration table")->required()->check(CLI::ExistingFile);
  re->add_option("--entry", entry, "entry conditions JSON")->check(CLI::ExistingFile);
  re->add_option("--out", out, "output directory")->required();
  re->add_option("--breakup-alt", breakup_km, "break-up altitude, km")->check(CLI::PositiveNumber);
  re->add_option("--seed", seed, "recorded in the outputs");

  auto* sv = app.add_subcommand("survive", "debris penetration probabilities and PNP");
  sv->add_option("--config", config, "configuration table")->required()->check(CLI::ExistingFile);
  sv->add_option("--flux-dir", flux_dir, "directory with directional.csv and diameter.csv")->check(CLI::ExistingDirectory);
  sv->add_option("--ble", ble, "ballistic limit coefficients")->check(CLI::ExistingFile);
  sv->add_option("--years", years, "mission duration, years")->check(CLI::NonNegativeNumber);
  sv->add_option("--sectors", sectors, "sector grid AZxEL");
  sv->add_option("--out", out, "output directory")->required();
  sv->add_option("--seed", seed, "recorded in the outputs");

  auto* sz = app.add_subcommand("size", "delta-V budget and propellant sizing");
  sz->add_option("--mission", mission, "mission JSON")->required()->check(CLI::ExistingFile);
  sz->add_option("--out", out, "output directory")->required();
  sz->add_option("--seed", seed, "recorded in the outputs");

  auto* op = app.add_subcommand("optimize", "NSGA-II tank design optimisation");
  op->add_option("--mission", oa.mission, "mission JSON")->required()->check(CLI::ExistingFile);
  op->add_option("--flux-dir", oa.flux_dir, "directory with directional.csv and diameter.csv")
      ->check(CLI::ExistingDirectory);
  op->add_option("--entry", oa.entry, "entry conditions JSON")->check(CLI::ExistingFile);
  op->add_option("--ble", oa.ble, "ballistic limit coefficients")->check(CLI::ExistingFile);
  op->add_option("--out", oa.out, "output directory")->required();
  op->add_option("--seed", oa.seed, "random seed");
  op->add_option("--max-tanks", oa.max_tanks, "largest tank count (1 to 6)")->check(CLI::Range(1, 6));
  op->add_option("--pop", oa.pop, "population size (even)")->check(CLI::PositiveNumber);
  op->add_option("--gens", oa.gens, "generations")->check(CLI::NonNegativeNumber);
  op->add_option("--workers", oa.workers, "evaluation threads")->check(CLI::PositiveNumber);
  op->add_option("--thickness-levels", oa.levels, "snap thickness to this many levels (0 = continuous)")
      ->check(CLI::NonNegativeNumber);
  op->add_option("--breakup-alt", oa.breakup_km, "break-up altitude, km")->check(CLI::PositiveNumber);
  op->add_option("--sectors", oa.sectors, "sector grid AZxEL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: cli: %s\n", e.what());
    return 2;
  }

  in.seed = seed;
  try {
    if (re->parsed()) {
      in.subcommand = "reentry";
      return run_reentry(config, entry, out, breakup_km, in);
    }
    if (sv->parsed()) {
      in.subcommand = "survive";
      return run_survive(config, flux_dir, ble, years, sectors, out, in);
    }
    if (sz->parsed()) {
      in.subcommand = "size";
      return run_size(mission, out, in);
    }
    in.subcommand = "optimize";
    return run_optimize(oa, in);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: cli: %s\n", e.what());
    return 2;
  } catch (const desurv::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: internal: %s\n", e.what());
    return 1;
  }
}
