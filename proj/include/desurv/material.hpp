#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace desurv {

/// Bulk properties of a structural material (SI units throughout).
struct Material {
  std::string name;
  double density = 0.0;            ///< kg/m^3
  double melting_temperature = 0.0;  ///< K
  double heat_capacity = 0.0;      ///< J/(kg K)
  double heat_of_fusion = 0.0;     ///< J/kg
  double emissivity = 0.0;         ///< (0, 1]
  double yield_strength = 0.0;     ///< Pa
  double ultimate_strength = 0.0;  ///< Pa
  double speed_of_sound = 0.0;     ///< m/s

  bool operator==(const Material&) const = default;
};

/// Throws desurv::Error("config", ...) when a field violates its bounds.
void validate(const Material& m);

/// Al-6061-T6, A316 and Ti-6Al-4V, in that order.
const std::vector<Material>& builtin_materials();

class MaterialLibrary {
 public:
  /// Library seeded with the built-in tank materials.
  MaterialLibrary();
  explicit MaterialLibrary(std::vector<Material> materials);

  /// CSV with header: name,density,melting_temperature,heat_capacity,
  /// heat_of_fusion,emissivity,yield_strength_mpa,ultimate_strength_mpa,speed_of_sound.
  /// Entries are appended to (and override) the built-ins.
  static MaterialLibrary from_file(const std::filesystem::path& path);

  const Material& get(std::string_view name) const;
  bool contains(std::string_view name) const;
  void add(Material m);
  const std::vector<Material>& all() const { return materials_; }

 private:
  std::vector<Material> materials_;
};

/// Lookup in the built-in library.
const Material& material_by_name(std::string_view name);

}  // namespace desurv
