#include "desurv/material.hpp"

#include <cmath>
#include <string>

#include "desurv/error.hpp"
#include "desurv/text_table.hpp"

namespace desurv {

void validate(const Material& m) {
  auto fail = [&](const std::string& what) {
    throw Error("config", "material '" + m.name + "': " + what);
  };
  if (m.name.empty()) throw Error("config", "material with empty name");
  if (!(m.density > 0.0)) fail("density must be > 0");
  if (!(m.melting_temperature > 0.0)) fail("melting temperature must be > 0");
  if (!(m.heat_capacity > 0.0)) fail("heat capacity must be > 0");
  if (!(m.heat_of_fusion > 0.0)) fail("heat of fusion must be > 0");
  if (!(m.emissivity > 0.0 && m.emissivity <= 1.0)) fail("emissivity must be in (0, 1]");
  if (!(m.yield_strength > 0.0)) fail("yield strength must be > 0");
  if (!(m.ultimate_strength >= m.yield_strength)) fail("ultimate strength must be >= yield strength");
  if (!(m.speed_of_sound > 0.0)) fail("speed of sound must be > 0");
}

const std::vector<Material>& builtin_materials() {
  static const std::vector<Material> kMaterials = {
      {"Al-6061-T6", 2713.0, 867.0, 896.0, 386116.0, 0.141, 276e6, 310e6, 5100.0},
      {"A316", 8026.85, 1644.0, 460.6, 286098.0, 0.35, 415e6, 600e6, 5790.0},
      {"Ti-6Al-4V", 4437.0, 1943.0, 805.2, 393559.0, 0.3, 880e6, 950e6, 4987.0},
  };
  return kMaterials;
}

MaterialLibrary::MaterialLibrary() : materials_(builtin_materials()) {}

MaterialLibrary::MaterialLibrary(std::vector<Material> materials) : materials_(std::move(materials)) {
  for (const auto& m : materials_) validate(m);
}

MaterialLibrary MaterialLibrary::from_file(const std::filesystem::path& path) {
  const auto table = TextTable::read(path, "config");
  const auto c_name = table.require_column("name");
  const auto c_rho = table.require_column("density");
  const auto c_tm = table.require_column("melting_temperature");
  const auto c_cp = table.require_column("heat_capacity");
  const auto c_hf = table.require_column("heat_of_fusion");
  const auto c_eps = table.require_column("emissivity");
  const auto c_sy = table.require_column("yield_strength_mpa");
  const auto c_su = table.require_column("ultimate_strength_mpa");
  const auto c_c = table.require_column("speed_of_sound");

  MaterialLibrary lib;
  for (const auto& row : table.rows()) {
    Material m;
    m.name = std::string(table.cell(row, c_name));
    m.density = table.number(row, c_rho);
    m.melting_temperature = table.number(row, c_tm);
    m.heat_capacity = table.number(row, c_cp);
    m.heat_of_fusion = table.number(row, c_hf);
    m.emissivity = table.number(row, c_eps);
    m.yield_strength = table.number(row, c_sy) * 1e6;
    m.ultimate_strength = table.number(row, c_su) * 1e6;
    m.speed_of_sound = table.number(row, c_c);
    lib.add(std::move(m));
  }
  return lib;
}

bool MaterialLibrary::contains(std::string_view name) const {
  for (const auto& m : materials_) {
    if (m.name == name) return true;
  }
  return false;
}

const Material& MaterialLibrary::get(std::string_view name) const {
  for (const auto& m : materials_) {
    if (m.name == name) return m;
  }
  std::string names;
  for (const auto& m : materials_) names += (names.empty() ? "" : ", ") + m.name;
  throw Error("config", "unknown material '" + std::string(name) + "' (available: " + names + ")");
}

void MaterialLibrary::add(Material m) {
  validate(m);
  for (auto& existing : materials_) {
    if (existing.name == m.name) {
      existing = std::move(m);
      return;
    }
  }
  materials_.push_back(std::move(m));
}

const Material& material_by_name(std::string_view name) {
  static const MaterialLibrary kBuiltin;
  return kBuiltin.get(name);
}

}  // namespace desurv
