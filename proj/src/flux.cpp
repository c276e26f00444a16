#include "desurv/flux.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>

#include "desurv/error.hpp"
#include "desurv/text_table.hpp"

namespace desurv {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::string row_error(std::size_t line, const std::string& what) {
  return "row at line " + std::to_string(line) + ": " + what;
}

}  // namespace

FluxModel::FluxModel(std::vector<FluxBin> bins, std::vector<CumulativeFluxPoint> cumulative)
    : bins_(std::move(bins)), cumulative_(std::move(cumulative)) {
  for (const FluxBin& b : bins_) {
    if (!(b.flux >= 0.0) || !std::isfinite(b.flux)) throw Error("debris-flux", "negative or invalid bin flux");
    if (!(b.velocity > 0.0) || !(b.diameter > 0.0)) {
      throw Error("debris-flux", "bin velocity and diameter must be positive");
    }
    total_ += b.flux;
  }
  std::sort(cumulative_.begin(), cumulative_.end(),
            [](const CumulativeFluxPoint& a, const CumulativeFluxPoint& b) { return a.diameter < b.diameter; });
  for (std::size_t i = 0; i < cumulative_.size(); ++i) {
    const auto& c = cumulative_[i];
    if (!(c.diameter > 0.0)) throw Error("debris-flux", "cumulative table diameters must be positive");
    if (!(c.flux >= 0.0)) throw Error("debris-flux", "negative cumulative flux");
    if (i > 0 && c.diameter == cumulative_[i - 1].diameter) {
      throw Error("debris-flux", "duplicate diameter in cumulative table");
    }
    if (i > 0 && c.flux > cumulative_[i - 1].flux) {
      throw Error("debris-flux", "cumulative flux increases with diameter");
    }
  }
}

double FluxModel::flux_larger_than(double d) const {
  if (cumulative_.empty() || d <= cumulative_.front().diameter) return total_;
  if (d > cumulative_.back().diameter) return 0.0;
  auto hi = std::lower_bound(cumulative_.begin(), cumulative_.end(), d,
                             [](const CumulativeFluxPoint& p, double v) { return p.diameter < v; });
  auto lo = hi - 1;
  double f;
  if (hi->flux <= 0.0 || lo->flux <= 0.0) {
    const double w = (d - lo->diameter) / (hi->diameter - lo->diameter);
    f = lo->flux + w * (hi->flux - lo->flux);
  } else {
    const double w = std::log(d / lo->diameter) / std::log(hi->diameter / lo->diameter);
    f = std::exp(std::log(lo->flux) + w * std::log(hi->flux / lo->flux));
  }
  return std::min(total_, f);
}

FluxModel parse_flux_tables(std::string_view directional_csv, std::string_view diameter_csv) {
  const TextTable dir = TextTable::parse(directional_csv, "debris-flux");
  const std::size_t c_az = dir.require_column("az_deg"), c_el = dir.require_column("el_deg"),
                    c_f = dir.require_column("flux_m2yr"), c_v = dir.require_column("vel_ms"),
                    c_d = dir.require_column("diam_m");
  std::vector<FluxBin> bins;
  for (const auto& row : dir.rows()) {
    FluxBin b{dir.number(row, c_az), dir.number(row, c_el), dir.number(row, c_f), dir.number(row, c_v),
              dir.number(row, c_d)};
    if (b.flux < 0.0) throw Error("debris-flux", row_error(row.line, "negative flux"));
    if (b.elevation_deg < -90.0 || b.elevation_deg > 90.0) {
      throw Error("debris-flux", row_error(row.line, "elevation outside [-90, 90]"));
    }
    bins.push_back(b);
  }
  const TextTable dia = TextTable::parse(diameter_csv, "debris-flux");
  const std::size_t c_dd = dia.require_column("diam_m"), c_cf = dia.require_column("cumflux_m2yr");
  std::vector<CumulativeFluxPoint> cum;
  for (const auto& row : dia.rows()) cum.push_back({dia.number(row, c_dd), dia.number(row, c_cf)});
  return FluxModel(std::move(bins), std::move(cum));
}

FluxModel load_flux_tables(const std::filesystem::path& directional, const std::filesystem::path& diameter) {
  return parse_flux_tables(read_file(directional, "debris-flux"), read_file(diameter, "debris-flux"));
}

FluxModel load_flux_directory(const std::filesystem::path& dir) {
  return load_flux_tables(dir / "directional.csv", dir / "diameter.csv");
}

void write_flux_tables(const FluxModel& model, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream d(dir / "directional.csv");
  std::ofstream c(dir / "diameter.csv");
  if (!d || !c) throw Error("debris-flux", "cannot write flux tables to " + dir.string());
  char buf[200];
  d << "az_deg,el_deg,flux_m2yr,vel_ms,diam_m\n";
  for (const FluxBin& b : model.bins()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", b.azimuth_deg, b.elevation_deg, b.flux,
                  b.velocity, b.diameter);
    d << buf;
  }
  c << "diam_m,cumflux_m2yr\n";
  for (const CumulativeFluxPoint& p : model.cumulative()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.diameter, p.flux);
    c << buf;
  }
}

namespace {

std::vector<CumulativeFluxPoint> power_law_table(const SyntheticFluxParams& p) {
  if (p.diameter_points < 2 || !(p.min_diameter > 0.0) || !(p.max_diameter > p.min_diameter)) {
    throw Error("debris-flux", "invalid synthetic diameter range");
  }
  std::vector<CumulativeFluxPoint> cum;
  const double l0 = std::log10(p.min_diameter), l1 = std::log10(p.max_diameter);
  for (int i = 0; i < p.diameter_points; ++i) {
    const double d = std::pow(10.0, l0 + (l1 - l0) * i / (p.diameter_points - 1));
    cum.push_back({d, p.reference_flux * std::pow(d / 1e-3, -p.slope)});
  }
  return cum;
}

}  // namespace

FluxModel synthetic_flux_model(const SyntheticFluxParams& p) {
  if (!(p.bin_width > 0.0) || !(p.azimuth_half_width > 0.0) || !(p.elevation_half_width > 0.0)) {
    throw Error("debris-flux", "invalid synthetic angular grid");
  }
  std::vector<CumulativeFluxPoint> cum = power_law_table(p);
  const double total = cum.front().flux;
  const int n_az = static_cast<int>(std::lround(2.0 * p.azimuth_half_width / p.bin_width));
  const int n_el = static_cast<int>(std::lround(2.0 * p.elevation_half_width / p.bin_width));
  std::vector<FluxBin> bins;
  double wsum = 0.0;
  for (int i = 0; i < n_az; ++i) {
    const double az = -p.azimuth_half_width + (i + 0.5) * p.bin_width;
    const double w_az = std::pow(std::cos(0.5 * az * kDeg), 2);
    for (int j = 0; j < n_el; ++j) {
      const double el = -p.elevation_half_width + (j + 0.5) * p.bin_width;
      bins.push_back({az, el, w_az, p.velocity, p.diameter});
      wsum += w_az;
    }
  }
  for (FluxBin& b : bins) b.flux *= total / wsum;
  return FluxModel(std::move(bins), std::move(cum));
}

FluxModel isotropic_flux_model(double total_flux, double velocity, double diameter, int elevation_bins,
                               const SyntheticFluxParams& sizes) {
  if (elevation_bins < 1) throw Error("debris-flux", "need at least one elevation bin");
  std::vector<FluxBin> bins;
  double wsum = 0.0;
  const double del = 180.0 / elevation_bins;
  for (int k = 0; k < 12; ++k) {
    const double az = -165.0 + 30.0 * k;
    for (int j = 0; j < elevation_bins; ++j) {
      const double el = -90.0 + (j + 0.5) * del;
      const double w = std::cos(el * kDeg);
      bins.push_back({az, el, w, velocity, diameter});
      wsum += w;
    }
  }
  for (FluxBin& b : bins) b.flux *= total_flux / wsum;
  std::vector<CumulativeFluxPoint> cum = power_law_table(sizes);
  const double scale = total_flux / cum.front().flux;
  for (auto& c : cum) c.flux *= scale;
  return FluxModel(std::move(bins), std::move(cum));
}

Vec3 arrival_vector(double azimuth_deg, double elevation_deg) {
  const double az = azimuth_deg * kDeg, el = elevation_deg * kDeg;
  return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
}

std::vector<VectorFluxElement> build_vector_flux_elements(const FluxModel& model, int n_az, int n_el) {
  if (n_az < 1 || n_el < 1) throw Error("debris-flux", "sector grid needs at least one sector per axis");
  if (model.empty()) throw Error("debris-flux", "empty flux model");
  struct Acc {
    Vec3 dir;
    double flux = 0.0, vel = 0.0, diam = 0.0;
  };
  std::map<int, Acc> sectors;
  for (const FluxBin& b : model.bins()) {
    double az = std::fmod(b.azimuth_deg + 180.0, 360.0);
    if (az < 0.0) az += 360.0;
    int ia = std::min(n_az - 1, static_cast<int>(az / (360.0 / n_az)));
    int ie = std::clamp(static_cast<int>((b.elevation_deg + 90.0) / (180.0 / n_el)), 0, n_el - 1);
    Acc& a = sectors[ie * n_az + ia];
    a.dir = a.dir + b.flux * arrival_vector(b.azimuth_deg, b.elevation_deg);
    a.flux += b.flux;
    a.vel += b.flux * b.velocity;
    a.diam += b.flux * b.diameter;
  }
  std::vector<VectorFluxElement> out;
  for (const auto& [id, a] : sectors) {
    if (!(a.flux > 0.0)) continue;
    VectorFluxElement v;
    if (norm(a.dir) > 1e-12 * a.flux) {
      v.direction = -normalized(a.dir);
    } else {
      // Opposing bins cancel out: fall back to the strongest bin's direction.
      const FluxBin* best = nullptr;
      for (const FluxBin& b : model.bins()) {
        if (!best || b.flux > best->flux) best = &b;
      }
      v.direction = -arrival_vector(best->azimuth_deg, best->elevation_deg);
    }
    v.flux = a.flux;
    v.velocity = a.vel / a.flux;
    v.diameter = a.diam / a.flux;
    v.sector = id;
    out.push_back(v);
  }
  return out;
}

double critical_flux(const FluxModel& model, const VectorFluxElement& vfe, double d_c) {
  const double total = model.total_flux();
  if (!(total > 0.0)) return 0.0;
  return vfe.flux * model.flux_larger_than(d_c) / total;
}

}  // namespace desurv
