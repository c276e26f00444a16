#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "desurv/environment.hpp"
#include "desurv/error.hpp"
#include "desurv/text_table.hpp"
#include "us76_table.hpp"

namespace desurv {
namespace {

constexpr double kR0 = 6356.766;             // km, effective Earth radius for geopotential
constexpr double kGMR = 34.163195;           // g0' * M0 / R*, K/km
constexpr double kAirGasConstant = 287.053;  // R* / M0, J/(kg K)
constexpr double kGamma = 1.4;
constexpr double kBoltzmann = 1.380649e-23;
constexpr double kCollisionDiameter = 3.65e-10;  // m

struct Layer {
  double base_h;     // geopotential km
  double base_t;     // molecular-scale temperature, K
  double lapse;      // K/km
  double base_p;     // Pa
};

constexpr std::array<Layer, 8> kLayers = {{
    {0.0, 288.15, -6.5, 101325.0},
    {11.0, 216.65, 0.0, 22632.06},
    {20.0, 216.65, 1.0, 5474.889},
    {32.0, 228.65, 2.8, 868.0187},
    {47.0, 270.65, 0.0, 110.9063},
    {51.0, 270.65, -2.8, 66.93887},
    {71.0, 214.65, -2.0, 3.956420},
    {84.852, 186.946, 0.0, 0.3733836},
}};

// Molecular-weight ratio M/M0 from 80 to 86 km at 0.5 km steps.
constexpr std::array<double, 13> kMolecularWeightRatio = {
    1.0, 0.999996, 0.999989, 0.999971, 0.999941, 0.999909, 0.999870,
    0.999829, 0.999786, 0.999741, 0.999694, 0.999641, 0.999579};

double mean_free_path(double temperature, double pressure) {
  return kBoltzmann * temperature /
         (std::numbers::sqrt2 * std::numbers::pi * kCollisionDiameter * kCollisionDiameter * pressure);
}

AtmosphereSample lower_atmosphere(double altitude) {
  const double z = altitude / 1000.0;
  const double h = kR0 * z / (kR0 + z);
  std::size_t i = kLayers.size() - 1;
  while (i > 0 && h < kLayers[i].base_h) --i;
  const auto& L = kLayers[i];
  const double dh = h - L.base_h;
  const double tm = L.base_t + L.lapse * dh;
  const double p = (L.lapse == 0.0) ? L.base_p * std::exp(-kGMR * dh / L.base_t)
                                    : L.base_p * std::pow(L.base_t / tm, kGMR / L.lapse);
  double ratio = 1.0;
  if (z > 80.0) {
    const double x = std::min((z - 80.0) / 0.5, 12.0);
    const auto k = static_cast<std::size_t>(std::min(x, 11.0));
    ratio = kMolecularWeightRatio[k] + (x - static_cast<double>(k)) * (kMolecularWeightRatio[k + 1] - kMolecularWeightRatio[k]);
  }
  AtmosphereSample s;
  s.temperature = tm * ratio;
  s.pressure = p;
  s.density = p / (kAirGasConstant * tm);
  s.mean_free_path = mean_free_path(s.temperature, p);
  s.speed_of_sound = std::sqrt(kGamma * kAirGasConstant * tm);
  return s;
}

AtmosphereSample upper_atmosphere(double altitude) {
  const auto& t = detail::kUs76Upper;
  const double x = (altitude / 1000.0 - t.front().altitude_km) / 2.0;
  const auto k = static_cast<std::size_t>(std::clamp(std::floor(x), 0.0, static_cast<double>(t.size() - 2)));
  const double w = x - static_cast<double>(k);
  const auto& a = t[k];
  const auto& b = t[k + 1];
  AtmosphereSample s;
  s.temperature = a.temperature + w * (b.temperature - a.temperature);
  s.pressure = std::exp(std::log(a.pressure) + w * (std::log(b.pressure) - std::log(a.pressure)));
  s.density = std::exp(std::log(a.density) + w * (std::log(b.density) - std::log(a.density)));
  s.mean_free_path = mean_free_path(s.temperature, s.pressure);
  s.speed_of_sound = std::sqrt(kGamma * kAirGasConstant * s.temperature);
  return s;
}

}  // namespace

AtmosphereSample atmosphere_at(double altitude) {
  if (!(altitude >= 0.0 && altitude <= kMaxAtmosphereAltitude)) {
    throw Error("environment", "altitude " + std::to_string(altitude) + " m outside [0, 1000000] m");
  }
  return altitude < 86000.0 ? lower_atmosphere(altitude) : upper_atmosphere(altitude);
}

AtmosphereModel AtmosphereModel::vacuum() {
  AtmosphereModel m;
  m.kind_ = Kind::kVacuum;
  return m;
}

AtmosphereModel AtmosphereModel::from_rows(std::vector<std::pair<double, double>> density,
                                           std::vector<double> temperature) {
  if (density.size() < 2 || density.size() != temperature.size()) {
    throw Error("environment", "atmosphere table needs at least two rows");
  }
  AtmosphereModel m;
  m.kind_ = Kind::kTable;
  for (std::size_t i = 0; i < density.size(); ++i) {
    const auto [h, rho] = density[i];
    if (i > 0 && !(h > m.alt_.back())) throw Error("environment", "atmosphere table altitudes must ascend");
    if (!(rho > 0.0) || !(temperature[i] > 0.0)) {
      throw Error("environment", "atmosphere table density and temperature must be > 0");
    }
    m.alt_.push_back(h);
    m.log_rho_.push_back(std::log(rho));
    m.temp_.push_back(temperature[i]);
  }
  return m;
}

AtmosphereModel AtmosphereModel::from_file(const std::filesystem::path& path) {
  const auto table = TextTable::read(path, "environment");
  const auto c_h = table.require_column("altitude_m");
  const auto c_rho = table.require_column("density_kgm3");
  const auto c_t = table.require_column("temperature_k");
  std::vector<std::pair<double, double>> rho;
  std::vector<double> temp;
  for (const auto& row : table.rows()) {
    rho.emplace_back(table.number(row, c_h), table.number(row, c_rho));
    temp.push_back(table.number(row, c_t));
  }
  return from_rows(std::move(rho), std::move(temp));
}

AtmosphereSample AtmosphereModel::sample(double altitude) const {
  switch (kind_) {
    case Kind::kVacuum:
      return {0.0, 0.0, 0.0, INFINITY, 0.0};
    case Kind::kStandard:
      if (altitude > kMaxAtmosphereAltitude) return {0.0, 0.0, 0.0, INFINITY, 0.0};
      return atmosphere_at(std::max(altitude, 0.0));
    case Kind::kTable: {
      const double h = std::clamp(altitude, alt_.front(), alt_.back());
      const auto it = std::upper_bound(alt_.begin(), alt_.end(), h);
      const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - alt_.begin() - 1, 0)),
                                                  alt_.size() - 2);
      const double w = (h - alt_[k]) / (alt_[k + 1] - alt_[k]);
      AtmosphereSample s;
      s.density = std::exp(log_rho_[k] + w * (log_rho_[k + 1] - log_rho_[k]));
      s.temperature = temp_[k] + w * (temp_[k + 1] - temp_[k]);
      s.pressure = s.density * kAirGasConstant * s.temperature;
      s.mean_free_path = mean_free_path(s.temperature, s.pressure);
      s.speed_of_sound = std::sqrt(kGamma * kAirGasConstant * s.temperature);
      return s;
    }
  }
  return {};
}

GravityVector gravity_at(double r, double lat, const GravityConstants& c) {
  const double s = std::sin(lat);
  const double co = std::cos(lat);
  const double q = c.earth_radius / r;
  const double q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const double s2 = s * s, s3 = s2 * s, s4 = s2 * s2;
  GravityVector g;
  g.radial = -c.mu / (r * r) *
             (1.0 - 1.5 * c.j2 * q2 * (3.0 * s2 - 1.0) - 2.0 * c.j3 * q3 * (5.0 * s3 - 3.0 * s) -
              0.625 * c.j4 * q4 * (35.0 * s4 - 30.0 * s2 + 3.0));
  g.polar = 3.0 * c.mu / (r * r) * q2 * s * co *
            (c.j2 + 0.5 * c.j3 * q * (5.0 * s2 - 1.0) + 5.0 / 6.0 * c.j4 * q2 * (7.0 * s2 - 1.0));
  // sin*cos is not exactly zero at +-90 deg in floating point.
  if (std::abs(co) < 1e-15 || s == 0.0) g.polar = 0.0;
  return g;
}

}  // namespace desurv
