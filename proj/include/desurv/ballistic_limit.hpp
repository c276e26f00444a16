#pragma once

#include <filesystem>
#include <memory>
#include <span>
#include <string_view>

#include "desurv/material.hpp"

namespace desurv {

struct WallLayer {
  Material material;
  double thickness = 0.0;  ///< m
  /// Distance from this layer to the next one in the stack (m). Ignored for
  /// the target wall.
  double spacing = 0.0;
};

struct Impact {
  double velocity = 0.0;  ///< m/s
  double angle = 0.0;     ///< rad from the wall normal
};

/// Ballistic limit equation. Layers run from the outside in; the target is
/// the innermost wall. Shields plus target may hold at most three layers.
class BallisticLimit {
 public:
  virtual ~BallisticLimit() = default;
  /// Smallest particle diameter that perforates the stack.
  virtual double critical_diameter(const Impact& impact, std::span<const WallLayer> shields,
                                   const WallLayer& target) const = 0;
  /// Perforation predicate for a particle of diameter d.
  virtual bool perforates(double d, const Impact& impact, std::span<const WallLayer> shields,
                          const WallLayer& target) const = 0;
};

/// One branch of the power-law model:
///   ballistic      d = k * sum(M_i t_i)^a * (V cos theta)^b
///   hypervelocity  d = k * M_t * t_target^a * S^c * (V cos theta)^b
/// where S is the spacing between the first shield and the target and M is
/// the material factor (rho/2713)^(1/3) (sigma_u/310 MPa)^(1/3).
struct PowerLawBranch {
  double coefficient = 0.0;
  double thickness_exponent = 1.0;
  double velocity_exponent = -2.0 / 3.0;
  double spacing_exponent = 0.0;
};

/// Placeholder coefficients; nothing here is a validated shield equation.
struct PowerLawCoefficients {
  PowerLawBranch ballistic{100.0, 1.0, -2.0 / 3.0, 0.0};
  PowerLawBranch hypervelocity{214.8, 2.0 / 3.0, -2.0 / 3.0, 1.0 / 3.0};
  double ballistic_velocity = 3000.0;      ///< m/s, upper end of the ballistic regime
  double hypervelocity_velocity = 7000.0;  ///< m/s, lower end of the hypervelocity regime
};

/// Text table with header branch,coefficient,thickness_exponent,
/// velocity_exponent,spacing_exponent and rows "ballistic" and
/// "hypervelocity". Missing rows keep the defaults.
PowerLawCoefficients parse_ble_coefficients(std::string_view text);
PowerLawCoefficients read_ble_coefficients(const std::filesystem::path& path);

double material_factor(const Material& m);

/// Default two-branch model. A single wall always uses the ballistic branch.
/// With shields, velocities between the two thresholds interpolate linearly
/// between the ballistic value at the lower and the hypervelocity value at
/// the upper threshold.
class PowerLawBle : public BallisticLimit {
 public:
  explicit PowerLawBle(PowerLawCoefficients c = {}) : c_(c) {}

  double critical_diameter(const Impact& impact, std::span<const WallLayer> shields,
                           const WallLayer& target) const override;
  bool perforates(double d, const Impact& impact, std::span<const WallLayer> shields,
                  const WallLayer& target) const override;

  const PowerLawCoefficients& coefficients() const { return c_; }

 private:
  double ballistic(double velocity, double cos_angle, std::span<const WallLayer> shields,
                   const WallLayer& target) const;
  double hypervelocity(double velocity, double cos_angle, std::span<const WallLayer> shields,
                       const WallLayer& target) const;

  PowerLawCoefficients c_;
};

/// Slot for the triple-wall Schafer-Ryan-Lambert equation. Its coefficients
/// are not bundled; callers provide them through a file in the power-law
/// format until a dedicated implementation is plugged in.
std::unique_ptr<BallisticLimit> make_ballistic_limit(const std::filesystem::path& coefficients_file = {});

}  // namespace desurv
