#pragma once

#include <string_view>

#include "desurv/environment.hpp"
#include "desurv/shape.hpp"

namespace desurv {

enum class FlowRegime { kFreeMolecular, kTransitional, kContinuum };

std::string_view to_string(FlowRegime regime);

inline constexpr double kFreeMolecularKnudsen = 10.0;
inline constexpr double kContinuumKnudsen = 0.01;
inline constexpr double kAirHeatCapacity = 1004.5;  ///< J/(kg K)

struct AeroThermoParams {
  double accommodation = 0.9;
  // Mach-dependent factors of the box and cylinder heat-load rows.
  double y = 1.0;
  double z = 1.0;
  double b = 1.0;
  double air_heat_capacity = kAirHeatCapacity;
};

FlowRegime regime_of(double knudsen);

/// Weight of the free-molecular value: 1 for Kn >= 10, 0 for Kn <= 0.01,
/// linear in log10(Kn) between.
double free_molecular_weight(double knudsen);

struct DragCoefficient {
  double cd = 0.0;
  double reference_area = 0.0;  ///< m^2

  double area_product() const { return cd * reference_area; }
};

DragCoefficient drag_coefficient_free_molecular(const PrimitiveShape& shape);
DragCoefficient drag_coefficient_continuum(const PrimitiveShape& shape);
/// Blended in log(Kn); both regimes share the reference area.
DragCoefficient drag_coefficient(const PrimitiveShape& shape, double knudsen);

double nose_radius(const PrimitiveShape& shape);

/// Flat plate normal to the flow, free-molecular flow. W/m^2.
double reference_heat_flux_free_molecular(double density, double velocity, double accommodation = 0.9);

/// Stagnation point of a sphere in continuum flow. Enthalpies are
/// c_p T_inf + V^2/2 (stagnation), c_p T_w (wall) and c_p 300 K. The
/// enthalpy ratio is clamped to [0, 1].
double reference_heat_flux_continuum(double density, double velocity, double nose_radius, double wall_temperature,
                                     double free_stream_temperature, double air_heat_capacity = kAirHeatCapacity);

double heat_flux_factor_free_molecular(const PrimitiveShape& shape, const AeroThermoParams& p = {});
double heat_flux_factor_continuum(const PrimitiveShape& shape, const AeroThermoParams& p = {});

/// q_av = F_q * q_ref for a pure regime. A transitional regime is not a
/// valid input here; use aerothermo() for blended values.
double averaged_heat_flux(const PrimitiveShape& shape, FlowRegime regime, double q_ref,
                          const AeroThermoParams& p = {});

struct AeroThermoSample {
  double knudsen = 0.0;
  FlowRegime regime = FlowRegime::kContinuum;
  double cd = 0.0;
  double reference_area = 0.0;
  double drag_force = 0.0;     ///< N
  double q_ref = 0.0;          ///< W/m^2, regime-blended reference flux
  double shape_factor = 0.0;   ///< q_av / q_ref (0 when q_ref is 0)
  double q_av = 0.0;           ///< W/m^2
  double accommodation = 0.0;
  double nose_radius = 0.0;
  double h_s = 0.0;
  double h_w = 0.0;
  double h_w300 = 0.0;
};

/// Drag and averaged heating for an object at the given flow conditions.
/// The free-molecular and continuum heat fluxes are averaged separately and
/// then blended with the same log(Kn) weight as the drag coefficient.
AeroThermoSample aerothermo(const PrimitiveShape& shape, const AtmosphereSample& air, double velocity,
                            double wall_temperature, const AeroThermoParams& p = {});

}  // namespace desurv
