#include "desurv/shape.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

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

}  // namespace

ShapeKind kind_of(const PrimitiveShape& shape) {
  return static_cast<ShapeKind>(shape.index());
}

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kSphere: return "Sphere";
    case ShapeKind::kBox: return "Box";
    case ShapeKind::kCylinder: return "Cylinder";
    case ShapeKind::kFlatPlate: return "FlatPlate";
  }
  return "?";
}

ShapeKind parse_shape_kind(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != '-' && c != '_' && c != ' ') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "sphere") return ShapeKind::kSphere;
  if (s == "box" || s == "cube") return ShapeKind::kBox;
  if (s == "cylinder") return ShapeKind::kCylinder;
  if (s == "flatplate" || s == "plate") return ShapeKind::kFlatPlate;
  throw Error("config", "unknown shape kind '" + std::string(text) + "'");
}

void validate(const PrimitiveShape& shape) {
  auto positive = [](std::initializer_list<double> dims) {
    return std::all_of(dims.begin(), dims.end(), [](double d) { return d > 0.0 && std::isfinite(d); });
  };
  const bool ok = std::visit(
      overloaded{
          [&](const Sphere& s) { return positive({s.radius}); },
          [&](const Box& b) { return positive({b.length, b.width, b.height}); },
          [&](const Cylinder& c) { return positive({c.diameter, c.length}); },
          [&](const FlatPlate& p) { return positive({p.length, p.width, p.thickness}); },
      },
      shape);
  if (!ok) throw Error("config", std::string(to_string(kind_of(shape))) + " has a non-positive dimension");
}

GeometryProps shape_geometry(const PrimitiveShape& shape) {
  validate(shape);
  GeometryProps g = std::visit(
      overloaded{
          [](const Sphere& s) {
            const double d = 2.0 * s.radius;
            return GeometryProps{4.0 / 3.0 * kPi * s.radius * s.radius * s.radius, kPi * d * d, 0.0, d};
          },
          [](const Box& b) {
            const double aw = 2.0 * (b.length * b.width + b.length * b.height + b.width * b.height);
            return GeometryProps{b.length * b.width * b.height, aw, 0.0, 2.0 * std::sqrt(b.width * b.height)};
          },
          [](const Cylinder& c) {
            const double aw = kPi * c.diameter * (c.diameter / 2.0 + c.length);
            return GeometryProps{kPi * c.diameter * c.diameter / 4.0 * c.length, aw, 0.0, c.diameter};
          },
          // Edges neglected.
          [](const FlatPlate& p) {
            return GeometryProps{p.length * p.width * p.thickness, 2.0 * p.length * p.width, 0.0, p.width / 2.0};
          },
      },
      shape);
  g.mean_cross_section = g.wetted_area / 4.0;
  return g;
}

std::array<double, 3> box_side_areas(const Box& b) {
  std::array<double, 3> a{b.length * b.width, b.length * b.height, b.width * b.height};
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

PrimitiveShape scaled(const PrimitiveShape& shape, double k) {
  return std::visit(overloaded{
                        [k](const Sphere& s) -> PrimitiveShape { return Sphere{k * s.radius}; },
                        [k](const Box& b) -> PrimitiveShape { return Box{k * b.length, k * b.width, k * b.height}; },
                        [k](const Cylinder& c) -> PrimitiveShape { return Cylinder{k * c.diameter, k * c.length}; },
                        [k](const FlatPlate& p) -> PrimitiveShape {
                          return FlatPlate{k * p.length, k * p.width, k * p.thickness};
                        },
                    },
                    shape);
}

Vec3 half_extents(const PrimitiveShape& shape) {
  return std::visit(
      overloaded{
          [](const Sphere& s) { return Vec3{s.radius, s.radius, s.radius}; },
          [](const Box& b) { return Vec3{b.length / 2.0, b.width / 2.0, b.height / 2.0}; },
          [](const Cylinder& c) { return Vec3{c.diameter / 2.0, c.diameter / 2.0, c.length / 2.0}; },
          [](const FlatPlate& p) { return Vec3{p.length / 2.0, p.width / 2.0, p.thickness / 2.0}; },
      },
      shape);
}

}  // namespace desurv
