#include "desurv/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "desurv/error.hpp"
#include "desurv/text_table.hpp"

namespace desurv {
namespace {

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool not_applicable(std::string_view cell) {
  const auto l = lower(cell);
  return l.empty() || l == "n/a" || l == "na" || l == "-" || l == "none";
}

[[noreturn]] void row_error(std::size_t line, const std::string& what) {
  throw Error("config", "row at line " + std::to_string(line) + ": " + what);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct RawRow {
  std::size_t line = 0;
  ConfigObject object;
  bool role_given = false;
};

}  // namespace

std::string_view to_string(Role role) {
  switch (role) {
    case Role::kStructure: return "structure";
    case Role::kPanel: return "panel";
    case Role::kComponent: return "component";
    case Role::kSubComponent: return "sub-component";
    case Role::kSolarPanel: return "solar-panel";
  }
  return "?";
}

Role parse_role(std::string_view text) {
  const auto l = lower(text);
  if (l == "structure") return Role::kStructure;
  if (l == "panel") return Role::kPanel;
  if (l == "component") return Role::kComponent;
  if (l == "sub-component" || l == "subcomponent") return Role::kSubComponent;
  if (l == "solar-panel" || l == "solarpanel" || l == "solar") return Role::kSolarPanel;
  throw Error("config", "unknown role '" + std::string(text) + "'");
}

std::string_view to_string(Face face) {
  static constexpr std::array<std::string_view, 6> kNames = {"+x", "-x", "+y", "-y", "+z", "-z"};
  return kNames[static_cast<int>(face)];
}

Vec3 face_normal(Face face) {
  const int i = static_cast<int>(face);
  Vec3 n;
  n[i / 2] = (i % 2 == 0) ? 1.0 : -1.0;
  return n;
}

const ConfigObject* SpacecraftConfig::find(int id) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), id,
                             [](const ConfigObject& o, int v) { return o.id < v; });
  return (it != objects_.end() && it->id == id) ? &*it : nullptr;
}

const ConfigObject& SpacecraftConfig::get(int id) const {
  if (const auto* o = find(id)) return *o;
  throw Error("config", "no object with id " + std::to_string(id));
}

std::vector<const ConfigObject*> SpacecraftConfig::children(int id) const {
  std::vector<const ConfigObject*> out;
  for (const auto& o : objects_) {
    if (o.parent == id) out.push_back(&o);
  }
  return out;
}

std::vector<const ConfigObject*> SpacecraftConfig::with_role(Role role) const {
  std::vector<const ConfigObject*> out;
  for (const auto& o : objects_) {
    if (o.role == role) out.push_back(&o);
  }
  return out;
}

int SpacecraftConfig::depth() const {
  std::function<int(int)> down = [&](int id) {
    int best = 0;
    for (const auto* c : children(id)) best = std::max(best, down(c->id));
    return best + 1;
  };
  return down(structure().id);
}

SpacecraftConfig SpacecraftConfig::build(std::vector<ConfigObject> objects) {
  std::sort(objects.begin(), objects.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < objects.size(); ++i) {
    if (objects[i].id == objects[i - 1].id) {
      throw Error("config", "duplicate id " + std::to_string(objects[i].id));
    }
  }
  SpacecraftConfig cfg;
  cfg.objects_ = std::move(objects);

  int structures = 0;
  for (std::size_t i = 0; i < cfg.objects_.size(); ++i) {
    const auto& o = cfg.objects_[i];
    const std::string tag = "object " + std::to_string(o.id) + " ('" + o.name + "')";
    validate(o.shape);
    validate(o.material);
    if (!(o.mass > 0.0)) throw Error("config", tag + ": mass must be > 0");
    if (o.quantity != 1) throw Error("config", tag + ": unexpanded quantity");
    if (o.wall_thickness && !(*o.wall_thickness > 0.0)) throw Error("config", tag + ": thickness must be > 0");
    if (o.role == Role::kStructure) {
      ++structures;
      cfg.structure_index_ = i;
      if (o.parent) throw Error("config", tag + ": structure cannot have a parent");
    } else if (!o.parent) {
      throw Error("config", tag + ": only the structure may omit a parent");
    } else if (!cfg.find(*o.parent)) {
      throw Error("config", tag + ": dangling parent id " + std::to_string(*o.parent));
    }
  }
  if (structures != 1) {
    throw Error("config", "expected exactly one structure object, found " + std::to_string(structures));
  }

  // Acyclic: every chain must reach the structure within N steps.
  const int root = cfg.structure().id;
  for (const auto& o : cfg.objects_) {
    const ConfigObject* cur = &o;
    std::size_t steps = 0;
    while (cur->id != root) {
      if (++steps > cfg.objects_.size() || !cur->parent) {
        throw Error("config", "object " + std::to_string(o.id) + ": cyclic parent chain");
      }
      cur = &cfg.get(*cur->parent);
    }
  }

  for (auto& o : cfg.objects_) {
    const std::string tag = "object " + std::to_string(o.id) + " ('" + o.name + "')";
    if ((o.role == Role::kPanel || o.role == Role::kSolarPanel) && o.parent != root) {
      throw Error("config", tag + ": panels must be children of the structure");
    }
    if (o.attachment) {
      const auto* p = cfg.find(*o.attachment);
      if (!p || p->role != Role::kPanel) {
        throw Error("config", tag + ": attachment " + std::to_string(*o.attachment) + " is not a panel");
      }
    }
  }

  // Stand-offs inside a box structure.
  if (const auto* box = std::get_if<Box>(&cfg.structure().shape)) {
    const Vec3 half{box->length / 2.0, box->width / 2.0, box->height / 2.0};
    for (auto& o : cfg.objects_) {
      if (o.role != Role::kComponent && o.role != Role::kSubComponent) continue;
      const Vec3 ext = half_extents(o.shape);
      std::array<double, 6> s{};
      for (Face f : kAllFaces) {
        const int axis = static_cast<int>(f) / 2;
        const double sign = static_cast<int>(f) % 2 == 0 ? 1.0 : -1.0;
        s[static_cast<int>(f)] = half[axis] - (sign * o.position[axis] + ext[axis]);
      }
      o.standoff = s;
    }
  }
  return cfg;
}

SpacecraftConfig parse_configuration(std::string_view text, const MaterialLibrary& materials) {
  const auto table = TextTable::parse(text, "config");
  const auto c_id = table.require_column("ID");
  const auto c_name = table.require_column("Name");
  const auto c_parent = table.require_column("Parent");
  const auto c_shape = table.require_column("Shape");
  const auto c_mass = table.require_column("Mass");
  const auto c_len = table.require_column("Length");
  const auto c_rad = table.require_column("Radius");
  const auto c_wid = table.require_column("Width");
  const auto c_hei = table.require_column("Height");
  const auto c_qty = table.require_column("Quantity");
  const auto c_mat = table.column("Material");
  const auto c_thk = table.column("Thickness");
  const auto c_pos = table.column("Position");
  const auto c_att = table.column("Attachment");
  const auto c_role = table.column("Role");

  std::vector<RawRow> rows;
  for (const auto& row : table.rows()) {
    auto number = [&](std::size_t col) -> std::optional<double> {
      const auto cell = table.cell(row, col);
      if (not_applicable(cell)) return std::nullopt;
      if (auto v = parse_double(cell)) return v;
      row_error(row.line, "column '" + table.header()[col] + "' is not a number ('" + std::string(cell) + "')");
    };
    auto opt_number = [&](std::optional<std::size_t> col) -> std::optional<double> {
      return col ? number(*col) : std::nullopt;
    };
    auto dim = [&](std::optional<double> v, const char* what) {
      if (!v || !(*v > 0.0)) row_error(row.line, std::string("non-positive dimension ") + what);
      return *v;
    };
    auto integer = [&](std::optional<double> v, const char* what) -> std::optional<int> {
      if (!v) return std::nullopt;
      if (*v != static_cast<double>(static_cast<int>(*v))) row_error(row.line, std::string(what) + " must be an integer");
      return static_cast<int>(*v);
    };

    RawRow raw;
    raw.line = row.line;
    auto& o = raw.object;
    const auto id = integer(number(c_id), "ID");
    if (!id) row_error(row.line, "missing ID");
    o.id = *id;
    o.name = std::string(table.cell(row, c_name));
    o.parent = integer(number(c_parent), "Parent");
    o.mass = number(c_mass).value_or(0.0);
    if (!(o.mass > 0.0)) row_error(row.line, "mass must be > 0");
    o.quantity = integer(number(c_qty), "Quantity").value_or(1);
    if (o.quantity < 1) row_error(row.line, "quantity must be >= 1");

    ShapeKind kind;
    try {
      kind = parse_shape_kind(table.cell(row, c_shape));
    } catch (const Error& e) {
      row_error(row.line, e.what());
    }
    const auto len = number(c_len), rad = number(c_rad), wid = number(c_wid), hei = number(c_hei);
    const auto thk = opt_number(c_thk);
    switch (kind) {
      case ShapeKind::kSphere: o.shape = Sphere{dim(rad, "Radius")}; break;
      case ShapeKind::kBox: o.shape = Box{dim(len, "Length"), dim(wid, "Width"), dim(hei, "Height")}; break;
      case ShapeKind::kCylinder: o.shape = Cylinder{2.0 * dim(rad, "Radius"), dim(len, "Length")}; break;
      case ShapeKind::kFlatPlate:
        o.shape = FlatPlate{dim(len, "Length"), dim(wid, "Width"), dim(hei ? hei : thk, "Height/Thickness")};
        break;
    }
    if (thk) {
      if (!(*thk > 0.0)) row_error(row.line, "non-positive dimension Thickness");
      o.wall_thickness = thk;
    }

    const auto mat = table.cell(row, c_mat);
    try {
      o.material = materials.get(not_applicable(mat) ? std::string_view("Al-6061-T6") : mat);
    } catch (const Error& e) {
      row_error(row.line, e.what());
    }

    if (const auto pos = table.cell(row, c_pos); !not_applicable(pos)) {
      std::array<double, 3> xyz{};
      std::size_t start = 0;
      for (int k = 0; k < 3; ++k) {
        const auto sep = std::string_view(pos).find(';', start);
        if ((k < 2) == (sep == std::string_view::npos)) row_error(row.line, "Position must be 'x;y;z'");
        const auto part = pos.substr(start, k < 2 ? sep - start : std::string_view::npos);
        const auto v = parse_double(part);
        if (!v) row_error(row.line, "Position must be 'x;y;z'");
        xyz[k] = *v;
        start = sep + 1;
      }
      o.position = {xyz[0], xyz[1], xyz[2]};
    }
    o.attachment = integer(opt_number(c_att), "Attachment");
    if (const auto role = table.cell(row, c_role); !not_applicable(role)) {
      try {
        o.role = parse_role(role);
      } catch (const Error& e) {
        row_error(row.line, e.what());
      }
      raw.role_given = true;
    }
    rows.push_back(std::move(raw));
  }

  // Topology checks on the raw rows so that errors name the offending row.
  std::map<int, std::size_t> by_id;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!by_id.emplace(rows[i].object.id, i).second) row_error(rows[i].line, "duplicate ID " + std::to_string(rows[i].object.id));
  }
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& o = rows[i].object;
    if (!o.parent) {
      if (root) row_error(rows[i].line, "second object without parent (exactly one structure allowed)");
      root = i;
      continue;
    }
    if (*o.parent == o.id) row_error(rows[i].line, "cyclic parent chain (object is its own parent)");
    if (!by_id.count(*o.parent)) row_error(rows[i].line, "dangling parent id " + std::to_string(*o.parent));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t cur = i;
    std::size_t steps = 0;
    while (rows[cur].object.parent) {
      if (++steps > rows.size()) row_error(rows[i].line, "cyclic parent chain");
      cur = by_id.at(*rows[cur].object.parent);
    }
  }
  if (!root) throw Error("config", "no structure row (a row with Parent = n/a)");
  if (rows[*root].object.quantity != 1) row_error(rows[*root].line, "structure quantity must be 1");

  const int root_id = rows[*root].object.id;
  for (auto& r : rows) {
    if (r.role_given) continue;
    if (!r.object.parent) {
      r.object.role = Role::kStructure;
    } else {
      r.object.role = (*r.object.parent == root_id) ? Role::kComponent : Role::kSubComponent;
    }
  }

  std::map<int, std::vector<std::size_t>> children;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].object.parent) children[*rows[i].object.parent].push_back(i);
  }

  int next_id = 0;
  for (const auto& r : rows) next_id = std::max(next_id, r.object.id + 1);

  std::vector<ConfigObject> expanded;
  std::function<void(std::size_t, std::optional<int>, const std::string&)> expand =
      [&](std::size_t idx, std::optional<int> parent_id, const std::string& suffix) {
        const auto& src = rows[idx].object;
        for (int k = 1; k <= src.quantity; ++k) {
          ConfigObject inst = src;
          inst.quantity = 1;
          inst.parent = parent_id;
          const bool first = expanded.end() == std::find_if(expanded.begin(), expanded.end(),
                                                            [&](const auto& e) { return e.id == src.id; });
          inst.id = first ? src.id : next_id++;
          std::string sfx = suffix;
          if (src.quantity > 1) sfx += "#" + std::to_string(k);
          inst.name = src.name + sfx;
          expanded.push_back(inst);
          const int inst_id = inst.id;
          for (std::size_t child : children[src.id]) expand(child, inst_id, sfx);
        }
      };
  expand(*root, std::nullopt, "");

  try {
    return SpacecraftConfig::build(std::move(expanded));
  } catch (const Error&) {
    throw;
  }
}

SpacecraftConfig read_configuration(const std::filesystem::path& path, const MaterialLibrary& materials) {
  return parse_configuration(read_file(path, "config"), materials);
}

std::string serialize_configuration(const SpacecraftConfig& config) {
  std::ostringstream out;
  out << "ID,Name,Parent,Shape,Mass,Length,Radius,Width,Height,Quantity,Material,Thickness,Position,Attachment,Role\n";
  for (const auto& o : config.objects()) {
    std::string len = "n/a", rad = "n/a", wid = "n/a", hei = "n/a";
    if (const auto* s = std::get_if<Sphere>(&o.shape)) {
      rad = fmt(s->radius);
    } else if (const auto* b = std::get_if<Box>(&o.shape)) {
      len = fmt(b->length), wid = fmt(b->width), hei = fmt(b->height);
    } else if (const auto* c = std::get_if<Cylinder>(&o.shape)) {
      rad = fmt(c->diameter / 2.0), len = fmt(c->length);
    } else if (const auto* p = std::get_if<FlatPlate>(&o.shape)) {
      len = fmt(p->length), wid = fmt(p->width), hei = fmt(p->thickness);
    }
    out << o.id << ',' << o.name << ',' << (o.parent ? std::to_string(*o.parent) : "n/a") << ','
        << to_string(kind_of(o.shape)) << ',' << fmt(o.mass) << ',' << len << ',' << rad << ',' << wid << ','
        << hei << ",1," << o.material.name << ',' << (o.wall_thickness ? fmt(*o.wall_thickness) : "n/a") << ','
        << fmt(o.position.x) << ';' << fmt(o.position.y) << ';' << fmt(o.position.z) << ','
        << (o.attachment ? std::to_string(*o.attachment) : "n/a") << ',' << to_string(o.role) << '\n';
  }
  return out.str();
}

}  // namespace desurv
