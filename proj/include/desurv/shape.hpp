#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "desurv/vec3.hpp"

namespace desurv {

// Body-frame orientation is fixed: box length/width/height run along x/y/z,
// cylinder axes and flat-plate normals point along z.

struct Sphere {
  double radius = 0.0;
  bool operator==(const Sphere&) const = default;
};

struct Box {
  double length = 0.0;
  double width = 0.0;
  double height = 0.0;
  bool operator==(const Box&) const = default;
};

struct Cylinder {
  double diameter = 0.0;
  double length = 0.0;
  bool operator==(const Cylinder&) const = default;
};

struct FlatPlate {
  double length = 0.0;
  double width = 0.0;
  double thickness = 0.0;
  bool operator==(const FlatPlate&) const = default;
};

using PrimitiveShape = std::variant<Sphere, Box, Cylinder, FlatPlate>;

enum class ShapeKind { kSphere, kBox, kCylinder, kFlatPlate };

ShapeKind kind_of(const PrimitiveShape& shape);
std::string_view to_string(ShapeKind kind);
/// Accepts "sphere", "box", "cube", "cylinder", "flat-plate"/"flatplate"/"plate"
/// (case-insensitive); throws desurv::Error("config", ...) otherwise.
ShapeKind parse_shape_kind(std::string_view text);

/// Throws desurv::Error("config", ...) for a non-positive dimension.
void validate(const PrimitiveShape& shape);

struct GeometryProps {
  double volume = 0.0;               ///< m^3
  double wetted_area = 0.0;          ///< m^2, external surface
  double mean_cross_section = 0.0;   ///< m^2, tumbling average (A_w / 4)
  double characteristic_length = 0.0;  ///< m, used for the Knudsen number
};

GeometryProps shape_geometry(const PrimitiveShape& shape);

/// Box side areas sorted so that A_x >= A_y >= A_z.
std::array<double, 3> box_side_areas(const Box& box);

/// Every dimension multiplied by k.
PrimitiveShape scaled(const PrimitiveShape& shape, double k);

/// Half-size of the shape's bounding box along the body axes.
Vec3 half_extents(const PrimitiveShape& shape);

}  // namespace desurv
