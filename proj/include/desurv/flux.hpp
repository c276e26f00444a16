#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "desurv/vec3.hpp"

namespace desurv {

/// One directional bin. Azimuth is measured from the ram direction (+x)
/// towards +y, elevation from the local horizontal towards zenith (+z); the
/// angles give the direction the particles arrive from.
struct FluxBin {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;
  double flux = 0.0;      ///< 1/(m^2 yr)
  double velocity = 0.0;  ///< m/s
  double diameter = 0.0;  ///< m, most probable
};

struct CumulativeFluxPoint {
  double diameter = 0.0;  ///< m
  double flux = 0.0;      ///< flux of particles larger than diameter, 1/(m^2 yr)
};

class FluxModel {
 public:
  FluxModel() = default;
  /// Validates and sorts the cumulative table by diameter. Throws
  /// desurv::Error("debris-flux", ...) for negative fluxes or a cumulative
  /// flux that grows with diameter.
  FluxModel(std::vector<FluxBin> bins, std::vector<CumulativeFluxPoint> cumulative);

  const std::vector<FluxBin>& bins() const { return bins_; }
  const std::vector<CumulativeFluxPoint>& cumulative() const { return cumulative_; }
  double total_flux() const { return total_; }
  bool empty() const { return bins_.empty(); }

  /// Flux of particles larger than d: log-log interpolation of the table,
  /// total flux below its first diameter, 0 above its last. Never exceeds
  /// total_flux().
  double flux_larger_than(double d) const;

 private:
  std::vector<FluxBin> bins_;
  std::vector<CumulativeFluxPoint> cumulative_;
  double total_ = 0.0;
};

/// directional CSV: az_deg,el_deg,flux_m2yr,vel_ms,diam_m
/// diameter CSV: diam_m,cumflux_m2yr
FluxModel load_flux_tables(const std::filesystem::path& directional, const std::filesystem::path& diameter);
FluxModel parse_flux_tables(std::string_view directional_csv, std::string_view diameter_csv);
/// Reads directional.csv and diameter.csv from a directory.
FluxModel load_flux_directory(const std::filesystem::path& dir);
void write_flux_tables(const FluxModel& model, const std::filesystem::path& dir);

/// Placeholder environment for desk-scale runs. None of these numbers come
/// from a real debris model.
struct SyntheticFluxParams {
  double reference_flux = 1e-3;  ///< flux larger than 1 mm, 1/(m^2 yr)
  double slope = 2.5;            ///< cumulative power-law exponent
  double velocity = 10e3;
  double diameter = 1e-3;        ///< most probable diameter per bin
  double azimuth_half_width = 90.0;
  double elevation_half_width = 15.0;
  double bin_width = 5.0;
  double min_diameter = 1e-5;
  double max_diameter = 0.1;
  int diameter_points = 41;
};

/// Power-law cumulative flux with an azimuth weight cos^2(az/2) around ram
/// and a flat elevation band. Total flux equals the cumulative flux at the
/// smallest tabulated diameter.
FluxModel synthetic_flux_model(const SyntheticFluxParams& p = {});

/// Direction-symmetric model (bins centred at 15 + 30k deg azimuth, weight
/// proportional to cos(elevation)) used for symmetry checks.
FluxModel isotropic_flux_model(double total_flux, double velocity, double diameter, int elevation_bins = 6,
                               const SyntheticFluxParams& size_distribution = {});

/// Unit vector pointing towards the given azimuth and elevation.
Vec3 arrival_vector(double azimuth_deg, double elevation_deg);

struct VectorFluxElement {
  Vec3 direction;        ///< unit particle velocity in the body frame
  double flux = 0.0;     ///< 1/(m^2 yr)
  double velocity = 0.0; ///< m/s
  double diameter = 0.0; ///< m
  int sector = 0;
};

/// Sectors split azimuth [-180, 180) into n_az and elevation [-90, 90] into
/// n_el equal slices. Each non-empty sector yields one element whose flux is
/// the sum of its bins and whose direction, velocity and diameter are
/// flux-weighted means.
std::vector<VectorFluxElement> build_vector_flux_elements(const FluxModel& model, int n_az, int n_el);

/// Share of the element's flux carried by particles larger than d_c.
double critical_flux(const FluxModel& model, const VectorFluxElement& vfe, double d_c);

}  // namespace desurv
