#include "desurv/aerothermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "desurv/error.hpp"

namespace desurv {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kPi = std::numbers::pi;

double box_equivalent_diameter(const Box& b) { return 2.0 * std::sqrt(b.width * b.height); }

double box_wetted_area(const Box& b) {
  return 2.0 * (b.length * b.width + b.length * b.height + b.width * b.height);
}

}  // namespace

std::string_view to_string(FlowRegime regime) {
  switch (regime) {
    case FlowRegime::kFreeMolecular: return "free-molecular";
    case FlowRegime::kTransitional: return "transitional";
    case FlowRegime::kContinuum: return "continuum";
  }
  return "?";
}

FlowRegime regime_of(double knudsen) {
  if (knudsen >= kFreeMolecularKnudsen) return FlowRegime::kFreeMolecular;
  if (knudsen <= kContinuumKnudsen) return FlowRegime::kContinuum;
  return FlowRegime::kTransitional;
}

double free_molecular_weight(double knudsen) {
  if (!(knudsen > kContinuumKnudsen)) return 0.0;
  if (knudsen >= kFreeMolecularKnudsen) return 1.0;
  const double lo = std::log10(kContinuumKnudsen);
  const double hi = std::log10(kFreeMolecularKnudsen);
  return (std::log10(knudsen) - lo) / (hi - lo);
}

DragCoefficient drag_coefficient_free_molecular(const PrimitiveShape& shape) {
  return std::visit(
      overloaded{
          [](const Sphere& s) { return DragCoefficient{2.0, kPi * s.radius * s.radius}; },
          [](const Box& b) {
            const auto a = box_side_areas(b);
            return DragCoefficient{1.0 * (a[0] + a[1] + a[2]) / a[1], a[1]};
          },
          [](const Cylinder& c) {
            return DragCoefficient{1.57 + 0.785 * c.diameter / c.length, c.diameter * c.length};
          },
          [](const FlatPlate& p) { return DragCoefficient{1.03, p.length * p.width}; },
      },
      shape);
}

DragCoefficient drag_coefficient_continuum(const PrimitiveShape& shape) {
  return std::visit(
      overloaded{
          [](const Sphere& s) { return DragCoefficient{0.92, kPi * s.radius * s.radius}; },
          [](const Box& b) {
            const auto a = box_side_areas(b);
            return DragCoefficient{0.46 * (a[0] + a[1] + a[2]) / a[1], a[1]};
          },
          [](const Cylinder& c) {
            return DragCoefficient{0.7198 + 0.326 * c.diameter / c.length, c.diameter * c.length};
          },
          [](const FlatPlate& p) { return DragCoefficient{0.46, p.length * p.width}; },
      },
      shape);
}

DragCoefficient drag_coefficient(const PrimitiveShape& shape, double knudsen) {
  const double w = free_molecular_weight(knudsen);
  const DragCoefficient fm = drag_coefficient_free_molecular(shape);
  const DragCoefficient co = drag_coefficient_continuum(shape);
  return {w * fm.cd + (1.0 - w) * co.cd, fm.reference_area};
}

double nose_radius(const PrimitiveShape& shape) {
  return std::visit(overloaded{
                        [](const Sphere& s) { return s.radius; },
                        [](const Box& b) { return box_equivalent_diameter(b) / 2.0; },
                        [](const Cylinder& c) { return c.diameter / 2.0; },
                        [](const FlatPlate& p) { return p.width / 4.0; },
                    },
                    shape);
}

double reference_heat_flux_free_molecular(double density, double velocity, double accommodation) {
  return 11356.6 * (accommodation * density * velocity * velocity * velocity / 1556.0);
}

double reference_heat_flux_continuum(double density, double velocity, double rn, double wall_temperature,
                                     double free_stream_temperature, double cp) {
  if (density <= 0.0 || velocity <= 0.0) return 0.0;
  if (rn <= 0.0) throw Error("demise", "nose radius must be positive");
  const double hs = cp * free_stream_temperature + 0.5 * velocity * velocity;
  const double hw = cp * wall_temperature;
  const double hw300 = cp * 300.0;
  if (hs <= hw) return 0.0;
  // The enthalpy ratio is capped at 1 so that it cannot diverge as the flow
  // enthalpy approaches the 300 K wall enthalpy at low speed.
  const double ratio = hs > hw300 ? std::min(1.0, (hs - hw) / (hs - hw300)) : 1.0;
  const double q = 1.99876e8 * std::sqrt(0.3048 / rn) * std::sqrt(density / kSeaLevelDensity) *
                   std::pow(velocity / 7924.8, 3.15) * ratio;
  return std::max(0.0, q);
}

double heat_flux_factor_free_molecular(const PrimitiveShape& shape, const AeroThermoParams& p) {
  return std::visit(overloaded{
                        [](const Sphere&) { return 0.255; },
                        [&](const Box& b) {
                          const double d = box_equivalent_diameter(b);
                          const double l = b.length;
                          return kPi * d * l * (0.1275 * d / l + 0.785 * p.y + 0.5 * p.z) / box_wetted_area(b);
                        },
                        [&](const Cylinder& c) {
                          const double r = c.diameter / c.length;
                          return (0.255 * r + 1.57 * p.y + p.z) / (2.0 + r);
                        },
                        [](const FlatPlate&) { return 0.255; },
                    },
                    shape);
}

double heat_flux_factor_continuum(const PrimitiveShape& shape, const AeroThermoParams& p) {
  return std::visit(overloaded{
                        [](const Sphere&) { return 0.345; },
                        [&](const Box& b) {
                          const double d = box_equivalent_diameter(b);
                          const double l = b.length;
                          return kPi * d * l * (0.179 + 0.1615 * d / l + 0.333 * p.b) / box_wetted_area(b);
                        },
                        [&](const Cylinder& c) {
                          const double r = c.diameter / c.length;
                          return (0.358 + 0.323 * r + 0.666 * p.b) / (2.0 + r);
                        },
                        [](const FlatPlate& f) {
                          // Equivalent disk of diameter W/2, both faces.
                          const double disk = kPi * f.width * f.width / 8.0;
                          return 0.233 * disk / (2.0 * f.length * f.width);
                        },
                    },
                    shape);
}

double averaged_heat_flux(const PrimitiveShape& shape, FlowRegime regime, double q_ref, const AeroThermoParams& p) {
  switch (regime) {
    case FlowRegime::kFreeMolecular: return heat_flux_factor_free_molecular(shape, p) * q_ref;
    case FlowRegime::kContinuum: return heat_flux_factor_continuum(shape, p) * q_ref;
    case FlowRegime::kTransitional: break;
  }
  throw Error("demise", "averaged_heat_flux needs a pure regime");
}

AeroThermoSample aerothermo(const PrimitiveShape& shape, const AtmosphereSample& air, double velocity,
                            double wall_temperature, const AeroThermoParams& p) {
  AeroThermoSample s;
  const double lc = shape_geometry(shape).characteristic_length;
  s.knudsen = air.density > 0.0 ? air.mean_free_path / lc : std::numeric_limits<double>::infinity();
  s.regime = regime_of(s.knudsen);
  const double w = free_molecular_weight(s.knudsen);

  const DragCoefficient cd = drag_coefficient(shape, s.knudsen);
  s.cd = cd.cd;
  s.reference_area = cd.reference_area;
  s.drag_force = 0.5 * air.density * velocity * velocity * cd.reference_area * cd.cd;

  s.accommodation = p.accommodation;
  s.nose_radius = nose_radius(shape);
  s.h_s = p.air_heat_capacity * air.temperature + 0.5 * velocity * velocity;
  s.h_w = p.air_heat_capacity * wall_temperature;
  s.h_w300 = p.air_heat_capacity * 300.0;

  double q_fm = 0.0, q_co = 0.0;
  if (w > 0.0) q_fm = reference_heat_flux_free_molecular(air.density, velocity, p.accommodation);
  if (w < 1.0) {
    q_co = reference_heat_flux_continuum(air.density, velocity, s.nose_radius, wall_temperature, air.temperature,
                                         p.air_heat_capacity);
  }
  s.q_ref = w * q_fm + (1.0 - w) * q_co;
  s.q_av = w * heat_flux_factor_free_molecular(shape, p) * q_fm +
           (1.0 - w) * heat_flux_factor_continuum(shape, p) * q_co;
  s.shape_factor = s.q_ref > 0.0 ? s.q_av / s.q_ref : 0.0;
  return s;
}

}  // namespace desurv
