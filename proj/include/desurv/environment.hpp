#pragma once

#include <filesystem>
#include <utility>
#include <vector>

namespace desurv {

struct AtmosphereSample {
  double density = 0.0;          ///< kg/m^3
  double temperature = 0.0;      ///< K
  double pressure = 0.0;         ///< Pa
  double mean_free_path = 0.0;   ///< m
  double speed_of_sound = 0.0;   ///< m/s
};

inline constexpr double kSeaLevelDensity = 1.225;
inline constexpr double kMaxAtmosphereAltitude = 1.0e6;

/// 1976 U.S. Standard Atmosphere, 0 to 1000 km geometric altitude. Below
/// 86 km the seven geopotential layers are evaluated in closed form; above it
/// the standard's tabulated profile is interpolated (log-linear in density and
/// pressure, linear in temperature) at 2 km spacing.
/// Throws desurv::Error("environment", ...) outside [0, 1000 km].
AtmosphereSample atmosphere_at(double altitude);

/// Atmosphere source used by the re-entry and budget models: either the
/// standard model, a user table, or an airless vacuum (test fixture).
class AtmosphereModel {
 public:
  AtmosphereModel() = default;

  static AtmosphereModel standard() { return {}; }
  static AtmosphereModel vacuum();
  /// Table with header altitude_m,density_kgm3,temperature_k (ascending
  /// altitude). Queries are clamped to the table ends.
  static AtmosphereModel from_file(const std::filesystem::path& path);
  static AtmosphereModel from_rows(std::vector<std::pair<double, double>> density,
                                   std::vector<double> temperature);

  /// Altitudes below 0 clamp to sea level; above 1000 km return vacuum.
  AtmosphereSample sample(double altitude) const;
  bool is_vacuum() const { return kind_ == Kind::kVacuum; }

 private:
  enum class Kind { kStandard, kVacuum, kTable };
  Kind kind_ = Kind::kStandard;
  std::vector<double> alt_, log_rho_, temp_;
};

struct GravityConstants {
  double mu = 3.986004418e14;          ///< G*M_E, m^3/s^2
  double earth_radius = 6371800.0;     ///< m
  double j2 = 1.0826e-3;
  double j3 = -2.5327e-6;
  double j4 = -1.6196e-6;
  double earth_rotation = 7.2921159e-5;  ///< rad/s
  double g0 = 9.81;                    ///< m/s^2
  double stefan_boltzmann = 5.67e-8;   ///< W/(m^2 K^4)

  /// Point-mass, non-rotating variant for fidelity checks.
  static GravityConstants spherical_nonrotating() {
    GravityConstants g;
    g.j2 = g.j3 = g.j4 = 0.0;
    g.earth_rotation = 0.0;
    return g;
  }
};

struct GravityVector {
  double radial = 0.0;  ///< m/s^2, negative toward the Earth centre
  double polar = 0.0;   ///< m/s^2
};

/// Zonal harmonic gravity through J4. The radial prefactor is mu / r^2.
GravityVector gravity_at(double radius, double latitude, const GravityConstants& c = {});

}  // namespace desurv
