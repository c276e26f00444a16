#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "desurv/material.hpp"
#include "desurv/shape.hpp"
#include "desurv/vec3.hpp"

namespace desurv {

enum class Role { kStructure, kPanel, kComponent, kSubComponent, kSolarPanel };

std::string_view to_string(Role role);
Role parse_role(std::string_view text);

/// Structure faces, in the order used for every per-face array.
enum class Face { kPosX = 0, kNegX, kPosY, kNegY, kPosZ, kNegZ };
inline constexpr std::array<Face, 6> kAllFaces = {Face::kPosX, Face::kNegX, Face::kPosY,
                                                  Face::kNegY, Face::kPosZ, Face::kNegZ};
std::string_view to_string(Face face);
/// Outward unit normal of a structure face.
Vec3 face_normal(Face face);

struct ConfigObject {
  int id = 0;
  std::string name;
  std::optional<int> parent;
  PrimitiveShape shape;
  double mass = 0.0;  ///< kg
  Material material;
  /// Shell wall thickness in metres; nullopt for solid objects.
  std::optional<double> wall_thickness;
  int quantity = 1;
  Role role = Role::kComponent;
  std::optional<int> attachment;  ///< panel id a component is mounted on
  Vec3 position;                  ///< centre, structure frame, metres
  /// Distance from each structure wall to the object's nearest surface along
  /// the face normal. Only filled for objects inside a box structure.
  std::optional<std::array<double, 6>> standoff;

  bool operator==(const ConfigObject&) const = default;
};

/// Validated, quantity-expanded object tree. Immutable after construction.
class SpacecraftConfig {
 public:
  /// Validates ids, parent links, roles and attachments, and computes stand-offs.
  /// Objects must already be expanded (quantity == 1 for every instance).
  static SpacecraftConfig build(std::vector<ConfigObject> objects);

  const std::vector<ConfigObject>& objects() const { return objects_; }
  const ConfigObject& structure() const { return objects_[structure_index_]; }
  const ConfigObject& get(int id) const;
  const ConfigObject* find(int id) const;
  std::vector<const ConfigObject*> children(int id) const;
  std::vector<const ConfigObject*> with_role(Role role) const;

  /// Number of levels in the tree (a structure-only config has depth 1).
  int depth() const;

  bool operator==(const SpacecraftConfig&) const = default;

 private:
  std::vector<ConfigObject> objects_;  // sorted by id
  std::size_t structure_index_ = 0;
};

/// Parses the configuration table. Mandatory columns: ID, Name, Parent, Shape,
/// Mass, Length, Radius, Width, Height, Quantity. Optional: Material,
/// Thickness, Position ("x;y;z"), Attachment, Role. "n/a" or an empty cell
/// means not applicable. Rows with Quantity > 1 expand into instances named
/// "<name>#<k>"; the first instance keeps the row id, the others take fresh
/// ids above the largest id in the document.
SpacecraftConfig parse_configuration(std::string_view text, const MaterialLibrary& materials = {});
SpacecraftConfig read_configuration(const std::filesystem::path& path, const MaterialLibrary& materials = {});

/// Writes the expanded tree in the same table format (one row per instance).
std::string serialize_configuration(const SpacecraftConfig& config);

}  // namespace desurv
