#include "desurv/ballistic_limit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "desurv/error.hpp"
#include "desurv/text_table.hpp"

namespace desurv {
namespace {

constexpr double kMinCos = 1e-6;

void check_stack(std::span<const WallLayer> shields, const WallLayer& target) {
  if (shields.size() + 1 > 3) {
    throw Error("survivability", "unsupported wall count " + std::to_string(shields.size() + 1) + " (at most 3)");
  }
  for (const WallLayer& w : shields) {
    if (!(w.thickness > 0.0)) throw Error("survivability", "shield layer thickness must be > 0");
  }
  if (!(target.thickness > 0.0)) throw Error("survivability", "target wall thickness must be > 0");
}

}  // namespace

PowerLawCoefficients parse_ble_coefficients(std::string_view text) {
  const TextTable t = TextTable::parse(text, "survivability");
  const std::size_t c_branch = t.require_column("branch"), c_k = t.require_column("coefficient");
  const auto c_t = t.column("thickness_exponent"), c_v = t.column("velocity_exponent"),
             c_s = t.column("spacing_exponent");
  PowerLawCoefficients c;
  for (const auto& row : t.rows()) {
    const std::string name(t.cell(row, c_branch));
    PowerLawBranch* b = nullptr;
    if (name == "ballistic") {
      b = &c.ballistic;
    } else if (name == "hypervelocity") {
      b = &c.hypervelocity;
    } else {
      throw Error("survivability", "line " + std::to_string(row.line) + ": unknown branch '" + name + "'");
    }
    b->coefficient = t.number(row, c_k);
    if (!(b->coefficient > 0.0)) throw Error("survivability", "BLE coefficient must be > 0");
    if (c_t && !t.cell(row, c_t).empty()) b->thickness_exponent = t.number(row, *c_t);
    if (c_v && !t.cell(row, c_v).empty()) b->velocity_exponent = t.number(row, *c_v);
    if (c_s && !t.cell(row, c_s).empty()) b->spacing_exponent = t.number(row, *c_s);
    if (!(b->thickness_exponent > 0.0) || b->velocity_exponent > 0.0 || b->spacing_exponent < 0.0) {
      throw Error("survivability", "line " + std::to_string(row.line) +
                                       ": exponents must keep the critical diameter increasing in thickness and "
                                       "spacing and non-increasing in velocity");
    }
  }
  return c;
}

PowerLawCoefficients read_ble_coefficients(const std::filesystem::path& path) {
  return parse_ble_coefficients(read_file(path, "survivability"));
}

double material_factor(const Material& m) {
  return std::cbrt(m.density / 2713.0) * std::cbrt(m.ultimate_strength / 310e6);
}

double PowerLawBle::ballistic(double velocity, double cos_angle, std::span<const WallLayer> shields,
                              const WallLayer& target) const {
  double areal = material_factor(target.material) * target.thickness;
  for (const WallLayer& w : shields) areal += material_factor(w.material) * w.thickness;
  const auto& b = c_.ballistic;
  return b.coefficient * std::pow(areal, b.thickness_exponent) * std::pow(velocity * cos_angle, b.velocity_exponent);
}

double PowerLawBle::hypervelocity(double velocity, double cos_angle, std::span<const WallLayer> shields,
                                  const WallLayer& target) const {
  double spacing = 0.0;
  for (const WallLayer& w : shields) spacing += w.spacing;
  const auto& b = c_.hypervelocity;
  return b.coefficient * material_factor(target.material) * std::pow(target.thickness, b.thickness_exponent) *
         std::pow(spacing, b.spacing_exponent) * std::pow(velocity * cos_angle, b.velocity_exponent);
}

double PowerLawBle::critical_diameter(const Impact& impact, std::span<const WallLayer> shields,
                                      const WallLayer& target) const {
  check_stack(shields, target);
  if (!(impact.velocity > 0.0)) throw Error("survivability", "impact velocity must be > 0");
  const double cosa = std::max(kMinCos, std::cos(impact.angle));
  const double v = impact.velocity;
  double spacing = 0.0;
  for (const WallLayer& w : shields) spacing += w.spacing;
  if (shields.empty() || !(spacing > 0.0) || v <= c_.ballistic_velocity) {
    return ballistic(v, cosa, shields, target);
  }
  if (v >= c_.hypervelocity_velocity) return hypervelocity(v, cosa, shields, target);
  const double lo = ballistic(c_.ballistic_velocity, cosa, shields, target);
  const double hi = hypervelocity(c_.hypervelocity_velocity, cosa, shields, target);
  const double w = (v - c_.ballistic_velocity) / (c_.hypervelocity_velocity - c_.ballistic_velocity);
  return lo + w * (hi - lo);
}

bool PowerLawBle::perforates(double d, const Impact& impact, std::span<const WallLayer> shields,
                             const WallLayer& target) const {
  check_stack(shields, target);
  const double cosa = std::max(kMinCos, std::cos(impact.angle));
  double spacing = 0.0;
  for (const WallLayer& w : shields) spacing += w.spacing;
  const double v = impact.velocity;
  if (shields.empty() || !(spacing > 0.0) || v <= c_.ballistic_velocity) {
    // Penetration capacity of the stack against the particle's normal-velocity damage term.
    double areal = material_factor(target.material) * target.thickness;
    for (const WallLayer& w : shields) areal += material_factor(w.material) * w.thickness;
    const auto& b = c_.ballistic;
    return d * std::pow(v * cosa, -b.velocity_exponent) >= b.coefficient * std::pow(areal, b.thickness_exponent);
  }
  return d >= critical_diameter(impact, shields, target);
}

std::unique_ptr<BallisticLimit> make_ballistic_limit(const std::filesystem::path& coefficients_file) {
  if (coefficients_file.empty()) return std::make_unique<PowerLawBle>();
  return std::make_unique<PowerLawBle>(read_ble_coefficients(coefficients_file));
}

}  // namespace desurv
