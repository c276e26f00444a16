#include "desurv/reentry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "desurv/error.hpp"
#include "desurv/text_table.hpp"

namespace desurv {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;
constexpr double kVerticalRegularization = 0.02;

enum Index : std::size_t { kR, kLat, kLon, kV, kGamma, kChi, kMass, kTemp, kStateSize };

ReentryState unpack(std::span<const double> y, double m_in) {
  ReentryState s;
  s.radius = y[kR];
  s.latitude = y[kLat];
  s.longitude = y[kLon];
  s.velocity = y[kV];
  s.flight_path_angle = y[kGamma];
  s.heading = y[kChi];
  s.mass = y[kMass];
  s.wall_temperature = y[kTemp];
  s.melt_fraction = m_in > 0.0 ? std::clamp(1.0 - s.mass / m_in, 0.0, 1.0) : 0.0;
  return s;
}

StateVector pack(const ReentryState& s, std::size_t extra = 0) {
  StateVector y(kStateSize + extra, 0.0);
  y[kR] = s.radius;
  y[kLat] = s.latitude;
  y[kLon] = s.longitude;
  y[kV] = s.velocity;
  y[kGamma] = s.flight_path_angle;
  y[kChi] = s.heading;
  y[kMass] = s.mass;
  y[kTemp] = s.wall_temperature;
  return y;
}

void write_rates(const ReentryRates& r, std::span<double> dy) {
  dy[kR] = r.radius;
  dy[kLat] = r.latitude;
  dy[kLon] = r.longitude;
  dy[kV] = r.velocity;
  dy[kGamma] = r.flight_path_angle;
  dy[kChi] = r.heading;
  dy[kMass] = r.mass;
  dy[kTemp] = r.wall_temperature;
}

TracePoint trace_point(double t, const ReentryState& s, const GravityConstants& g) {
  return {t, s.altitude(g), s.velocity, s.flight_path_angle, s.mass, s.wall_temperature};
}

/// Appends accepted states to a trace at a fixed cadence.
class TraceRecorder {
 public:
  TraceRecorder(std::vector<TracePoint>* out, double interval, double t0, double m_in, const GravityConstants& g)
      : out_(out), interval_(interval), next_(t0), m_in_(m_in), g_(g) {}

  void operator()(double t, std::span<const double> y) {
    if (!out_ || interval_ <= 0.0 || t < next_) return;
    out_->push_back(trace_point(t, unpack(y, m_in_), g_));
    next_ = t + interval_;
  }

  void finish(double t, std::span<const double> y) {
    if (!out_ || interval_ <= 0.0) return;
    if (!out_->empty() && out_->back().time == t) return;
    out_->push_back(trace_point(t, unpack(y, m_in_), g_));
  }

 private:
  std::vector<TracePoint>* out_;
  double interval_;
  double next_;
  double m_in_;
  GravityConstants g_;
};

double radiated_flux(const Material& m, double temperature) {
  const double t2 = temperature * temperature;
  return m.emissivity * 5.67e-8 * t2 * t2;
}

std::string hex(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%a;", v);
  return buf;
}

std::string body_key(const ReentryBody& b, const ReentryState& s) {
  std::string k = std::to_string(b.shape.index()) + ";";
  const std::array<double, 3> dims = std::visit(
      [](const auto& sh) {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Sphere>) return std::array<double, 3>{sh.radius, 0.0, 0.0};
        else if constexpr (std::is_same_v<T, Box>) return std::array<double, 3>{sh.length, sh.width, sh.height};
        else if constexpr (std::is_same_v<T, Cylinder>) return std::array<double, 3>{sh.diameter, sh.length, 0.0};
        else return std::array<double, 3>{sh.length, sh.width, sh.thickness};
      },
      b.shape);
  for (double d : dims) k += hex(d);
  k += b.material.name + ";";
  for (double v : {b.material.density, b.material.melting_temperature, b.material.heat_capacity,
                   b.material.heat_of_fusion, b.material.emissivity, b.initial_mass, b.wetted_area,
                   b.extra_drag_area, s.radius, s.latitude, s.longitude, s.velocity, s.flight_path_angle,
                   s.heading, s.mass, s.wall_temperature}) {
    k += hex(v);
  }
  return k;
}

}  // namespace

EntryConditions parse_entry_conditions(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("demise", std::string("entry conditions: ") + e.what());
  }
  if (!j.is_object()) throw Error("demise", "entry conditions must be a JSON object");
  EntryConditions e;
  auto get = [&](const char* key, double scale, double& field) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw Error("demise", std::string("entry conditions: '") + key + "' must be a number");
    field = j[key].get<double>() * scale;
  };
  get("altitude_km", 1e3, e.altitude);
  get("flight_path_angle_deg", kDeg, e.flight_path_angle);
  get("velocity_kms", 1e3, e.velocity);
  get("longitude_deg", kDeg, e.longitude);
  get("latitude_deg", kDeg, e.latitude);
  get("heading_deg", kDeg, e.heading);
  if (!(e.altitude > 0.0) || !(e.velocity > 0.0)) {
    throw Error("demise", "entry altitude and velocity must be positive");
  }
  return e;
}

EntryConditions read_entry_conditions(const std::filesystem::path& path) {
  return parse_entry_conditions(read_file(path, "demise"));
}

ReentryState initial_state(const EntryConditions& e, double mass, double wall_temperature,
                           const GravityConstants& g) {
  ReentryState s;
  s.radius = g.earth_radius + e.altitude;
  s.latitude = e.latitude;
  s.longitude = e.longitude;
  s.velocity = e.velocity;
  s.flight_path_angle = e.flight_path_angle;
  s.heading = e.heading;
  s.mass = mass;
  s.wall_temperature = wall_temperature;
  return s;
}

ReentryBody ReentryBody::from_shape(const PrimitiveShape& shape, const Material& material, double mass) {
  ReentryBody b;
  b.shape = shape;
  b.material = material;
  b.initial_mass = mass;
  b.wetted_area = shape_geometry(shape).wetted_area;
  return b;
}

ReentryRates trajectory_rhs(const ReentryState& s, const ReentryBody& body, const ReentryEnvironment& env) {
  ReentryRates d;
  const GravityConstants& c = env.gravity;
  const double r = s.radius;
  const double V = s.velocity;
  if (!(r > 0.0) || !(s.mass > 0.0)) {
    d.finite = false;
    return d;
  }
  const AtmosphereSample air = env.atmosphere.sample(r - c.earth_radius);
  // A melting object shrinks self-similarly: lengths scale with (m/m_in)^(1/3).
  const double k = body.ablates && body.initial_mass > 0.0 && s.mass < body.initial_mass
                       ? std::cbrt(s.mass / body.initial_mass)
                       : 1.0;
  d.aero = aerothermo(k == 1.0 ? body.shape : scaled(body.shape, k), air, V, s.wall_temperature, env.aero);
  const double area = body.wetted_area * k * k;
  const double drag = d.aero.drag_force + 0.5 * air.density * V * V * body.extra_drag_area;

  const GravityVector g = gravity_at(r, s.latitude, c);
  const double w = c.earth_rotation;
  const double sg = std::sin(s.flight_path_angle), cg = std::cos(s.flight_path_angle);
  const double sc = std::sin(s.heading), cc = std::cos(s.heading);
  const double sp = std::sin(s.latitude), cp = std::cos(s.latitude);

  d.radius = V * sg;
  d.latitude = V / r * cg * cc;
  d.longitude = V * cg * sc / (r * cp);
  d.velocity = -drag / s.mass + g.radial * sg - g.polar * cg * cc - w * w * r * cp * (cg * cc * sp - sg * cp);
  // The heading equation is singular in vertical flight. 1/cos(gamma) is
  // replaced by cos(gamma) / (cos^2(gamma) + 0.02^2), which is identical away
  // from the vertical and bounded near it.
  const double inv_cg = cg / (cg * cg + kVerticalRegularization * kVerticalRegularization);
  const double tg = sg * inv_cg;
  d.heading = V / r * cg * sc * std::tan(s.latitude) + g.polar / V * sc * inv_cg +
              w * w * r * sc * sp * cp / V * inv_cg - 2.0 * w * inv_cg * (tg * cc * cp - sp);
  d.flight_path_angle = V / r * cg + g.radial / V * cg + g.polar / V * sg * cc +
                        w * w * r / V * cp * (sg * cc * sp + cg * cp) + 2.0 * w * sc * cp;

  const Material& m = body.material;
  const double net = d.aero.q_av - radiated_flux(m, s.wall_temperature);
  if (body.ablates && s.wall_temperature >= m.melting_temperature && net > 0.0) {
    d.mass = -area * net / m.heat_of_fusion;
    d.wall_temperature = 0.0;
  } else {
    d.mass = 0.0;
    d.wall_temperature = area / (s.mass * m.heat_capacity) * net;
  }

  d.finite = std::isfinite(d.radius) && std::isfinite(d.latitude) && std::isfinite(d.longitude) &&
             std::isfinite(d.velocity) && std::isfinite(d.heading) && std::isfinite(d.flight_path_angle) &&
             std::isfinite(d.mass) && std::isfinite(d.wall_temperature);
  return d;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kDemised: return "demised";
    case Outcome::kSurvivedGround: return "survived-ground";
    case Outcome::kSurvivedLowEnergy: return "survived-low-energy";
    case Outcome::kFailed: return "failed";
  }
  return "?";
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kSolarPanelRelease: return "solar-panel-release";
    case EventKind::kPanelDetachment: return "panel-detachment";
    case EventKind::kBreakup: return "break-up";
    case EventKind::kParentGround: return "parent-ground";
  }
  return "?";
}

ObjectRun simulate_object(const ReentryState& initial, const ReentryBody& body, const ReentryEnvironment& env,
                          const SimulationOptions& opt) {
  const GravityConstants& gc = env.gravity;
  const double m_in = body.initial_mass > 0.0 ? body.initial_mass : initial.mass;
  const double t_melt = body.material.melting_temperature;

  auto f = [&](double, std::span<const double> y, std::span<double> dy) {
    const ReentryRates r = trajectory_rhs(unpack(y, m_in), body, env);
    if (!r.finite) return false;
    write_rates(r, dy);
    return true;
  };
  enum { kGround, kDemise, kLowEnergy };
  const TerminalEvent events[] = {
      {kGround, [&](double, std::span<const double> y) { return y[kR] - gc.earth_radius; }, opt.altitude_resolution},
      {kDemise, [&](double, std::span<const double> y) { return y[kMass] - opt.demise_fraction * m_in; },
       std::min(opt.mass_resolution, 0.5 * opt.demise_fraction * m_in)},
      {kLowEnergy, [&](double, std::span<const double> y) { return 0.5 * y[kMass] * y[kV] * y[kV] - opt.low_energy; },
       1e-3 * opt.low_energy},
  };
  auto project = [&](std::span<double> y) {
    if (y[kTemp] > t_melt) y[kTemp] = t_melt;
    if (y[kMass] < 0.0) y[kMass] = 0.0;
  };

  ObjectRun run;
  TraceRecorder rec(&run.trace, opt.trace_interval, 0.0, m_in, gc);
  DormandPrince dp(opt.integrator);
  StateVector y0 = pack(initial);
  project(y0);
  const IntegrationResult res =
      dp.integrate(f, 0.0, std::move(y0), opt.max_time, events, [&](double t, std::span<const double> y) { rec(t, y); },
                   project);
  rec.finish(res.t, res.y);

  ObjectFate& fate = run.fate;
  fate.initial_mass = m_in;
  fate.final_state = unpack(res.y, m_in);
  fate.flight_time = res.t;
  fate.steps = res.steps;
  fate.landing_latitude = fate.final_state.latitude;
  fate.landing_longitude = fate.final_state.longitude;
  fate.final_cross_section = shape_geometry(body.shape).mean_cross_section *
                             std::pow(std::min(1.0, fate.final_state.mass / m_in), 2.0 / 3.0);
  fate.final_mass = fate.final_state.mass;

  if (res.status == IntegrationStatus::kEvent) {
    switch (res.event_id) {
      case kGround:
        fate.outcome = Outcome::kSurvivedGround;
        fate.impact_energy = fate.final_state.kinetic_energy();
        break;
      case kDemise:
        fate.outcome = Outcome::kDemised;
        fate.final_mass = 0.0;
        fate.final_cross_section = 0.0;
        fate.demise_altitude = fate.final_state.altitude(gc);
        break;
      default:
        fate.outcome = Outcome::kSurvivedLowEnergy;
        fate.impact_energy = fate.final_state.kinetic_energy();
        break;
    }
  } else {
    fate.outcome = Outcome::kFailed;
    switch (res.status) {
      case IntegrationStatus::kStepUnderflow: fate.error = "integrator step underflow"; break;
      case IntegrationStatus::kMaxSteps: fate.error = "integrator step limit reached"; break;
      default: fate.error = "time limit reached before a terminal event"; break;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, " at t=%.3f s, h=%.1f m, V=%.2f m/s, m=%.6g kg", res.t,
                  fate.final_state.altitude(gc), fate.final_state.velocity, fate.final_state.mass);
    fate.error += buf;
  }
  return run;
}

ParentPhase simulate_parent_phase(const SpacecraftConfig& config, const EntryConditions& entry,
                                  const ReentryEnvironment& env, const ReentryOptions& opt) {
  const GravityConstants& gc = env.gravity;
  const ConfigObject& st = config.structure();

  std::vector<const ConfigObject*> panels = config.with_role(Role::kPanel);
  std::vector<const ConfigObject*> solar = config.with_role(Role::kSolarPanel);
  std::vector<const ConfigObject*> components;
  for (const ConfigObject* c : config.children(st.id)) {
    if (c->role == Role::kComponent) components.push_back(c);
  }

  double total_mass = 0.0;
  for (const ConfigObject& o : config.objects()) total_mass += o.mass;

  ParentPhase out;
  ReentryState s = initial_state(entry, total_mass, 300.0, gc);
  ReentryBody parent = ReentryBody::from_shape(st.shape, st.material, total_mass);
  parent.ablates = false;
  // Solar arrays fly edge-free and mostly in rarefied flow above their
  // release altitude, so their free-molecular C_D * A is used.
  for (const ConfigObject* sp : solar) parent.extra_drag_area += drag_coefficient_free_molecular(sp->shape).area_product();

  std::vector<bool> detached(panels.size(), false);
  std::vector<double> panel_temp(panels.size(), 300.0);
  bool solar_attached = !solar.empty();
  double t = 0.0;

  auto release = [&](const ConfigObject& o, ReentryState state, double temperature) {
    state.mass = o.mass;
    state.wall_temperature = temperature;
    state.melt_fraction = 0.0;
    out.releases.emplace_back(o.id, state);
    out.release_times.push_back(t);
  };
  auto drop_solar = [&]() {
    ReentryEvent ev{EventKind::kSolarPanelRelease, t, s.altitude(gc), {}};
    for (const ConfigObject* sp : solar) {
      ev.released.push_back(sp->id);
      s.mass -= sp->mass;
      release(*sp, s, 300.0);
    }
    parent.extra_drag_area = 0.0;
    solar_attached = false;
    out.events.push_back(std::move(ev));
  };
  auto detach_panel = [&](std::size_t i) {
    const ConfigObject& p = *panels[i];
    detached[i] = true;
    ReentryEvent ev{EventKind::kPanelDetachment, t, s.altitude(gc), {p.id}};
    s.mass -= p.mass;
    release(p, s, panel_temp[i]);
    for (const ConfigObject* c : components) {
      if (c->attachment && *c->attachment == p.id) {
        ev.released.push_back(c->id);
        s.mass -= c->mass;
        release(*c, s, opt.component_temperature);
      }
    }
    out.events.push_back(std::move(ev));
  };
  auto is_released = [&](int id) {
    return std::any_of(out.releases.begin(), out.releases.end(), [&](const auto& r) { return r.first == id; });
  };

  if (solar_attached && s.altitude(gc) <= opt.solar_panel_altitude) drop_solar();

  const std::size_t n = panels.size();
  std::vector<double> panel_area(n), panel_cap(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Only the outer face of a wall panel sees the flow.
    panel_area[i] = shape_geometry(panels[i]->shape).wetted_area / 2.0;
    panel_cap[i] = panels[i]->mass * panels[i]->material.heat_capacity;
  }
  // Heat capacity of the parent skin: the structure alone.
  const double skin_cap = st.mass * st.material.heat_capacity;

  auto f = [&](double, std::span<const double> y, std::span<double> dy) {
    ReentryState cur = unpack(y, total_mass);
    ReentryRates r = trajectory_rhs(cur, parent, env);
    if (!r.finite) return false;
    r.wall_temperature *= cur.mass * parent.material.heat_capacity / skin_cap;
    write_rates(r, dy);
    for (std::size_t i = 0; i < n; ++i) {
      const double T = y[kStateSize + i];
      const double net = r.aero.q_av - radiated_flux(panels[i]->material, T);
      dy[kStateSize + i] = detached[i] ? 0.0 : panel_area[i] * net / panel_cap[i];
      if (!std::isfinite(dy[kStateSize + i])) return false;
    }
    return true;
  };
  auto project = [&](std::span<double> y) {
    if (y[kTemp] > st.material.melting_temperature) y[kTemp] = st.material.melting_temperature;
    for (std::size_t i = 0; i < n; ++i) {
      y[kStateSize + i] = std::min(y[kStateSize + i], panels[i]->material.melting_temperature);
    }
  };

  enum { kGround = 0, kBreakup = 1, kSolar = 2, kPanelBase = 100 };
  DormandPrince dp(opt.simulation.integrator);
  TraceRecorder rec(&out.trace, opt.simulation.trace_interval, 0.0, total_mass, gc);
  while (true) {
    std::vector<TerminalEvent> events;
    events.push_back({kGround, [&](double, std::span<const double> y) { return y[kR] - gc.earth_radius; },
                      opt.simulation.altitude_resolution});
    events.push_back({kBreakup,
                      [&](double, std::span<const double> y) {
                        return y[kR] - gc.earth_radius - opt.breakup_altitude;
                      },
                      opt.simulation.altitude_resolution});
    if (solar_attached) {
      events.push_back({kSolar,
                        [&](double, std::span<const double> y) {
                          return y[kR] - gc.earth_radius - opt.solar_panel_altitude;
                        },
                        opt.simulation.altitude_resolution});
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (detached[i]) continue;
      const double tm = panels[i]->material.melting_temperature;
      events.push_back({static_cast<int>(kPanelBase + i),
                        [i, tm](double, std::span<const double> y) { return tm - y[kStateSize + i]; }, 1e-3});
    }

    StateVector y = pack(s, n);
    for (std::size_t i = 0; i < n; ++i) y[kStateSize + i] = panel_temp[i];
    const IntegrationResult res = dp.integrate(
        f, t, std::move(y), t + opt.simulation.max_time, events,
        [&](double tt, std::span<const double> yy) { rec(tt, yy); }, project);
    t = res.t;
    s = unpack(res.y, total_mass);
    for (std::size_t i = 0; i < n; ++i) panel_temp[i] = res.y[kStateSize + i];

    if (res.status != IntegrationStatus::kEvent) {
      throw Error("demise", "parent trajectory did not reach break-up (integration stopped at h=" +
                                std::to_string(s.altitude(gc)) + " m)");
    }
    if (res.event_id == kSolar) {
      drop_solar();
      continue;
    }
    if (res.event_id >= kPanelBase) {
      detach_panel(static_cast<std::size_t>(res.event_id - kPanelBase));
      continue;
    }
    rec.finish(res.t, res.y);
    out.events.push_back({res.event_id == kGround ? EventKind::kParentGround : EventKind::kBreakup, t,
                          s.altitude(gc), {}});
    break;
  }

  if (solar_attached) drop_solar();
  out.breakup_state = s;
  out.breakup_time = t;
  ReentryEvent& bu = out.events.back();
  for (std::size_t i = 0; i < n; ++i) {
    if (detached[i]) continue;
    bu.released.push_back(panels[i]->id);
    release(*panels[i], s, panel_temp[i]);
  }
  for (const ConfigObject* c : components) {
    if (is_released(c->id)) continue;
    bu.released.push_back(c->id);
    release(*c, s, opt.component_temperature);
  }
  return out;
}

ReentryReport simulate_release_phase(const SpacecraftConfig& config, ParentPhase parent,
                                     const ReentryEnvironment& env, const ReentryOptions& opt) {
  const GravityConstants& gc = env.gravity;
  ReentryReport report;
  std::map<std::string, ObjectRun> cache;

  struct Pending {
    int id;
    ReentryState state;
  };
  std::vector<Pending> queue;
  for (const auto& [id, st] : parent.releases) queue.push_back({id, st});

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Pending p = queue[qi];
    const ConfigObject& o = config.get(p.id);
    ObjectRun run;
    if (o.role == Role::kSolarPanel) {
      run.fate.outcome = Outcome::kDemised;
      run.fate.initial_mass = o.mass;
      run.fate.final_state = p.state;
      run.fate.demise_altitude = p.state.altitude(gc);
    } else {
      const ReentryBody body = ReentryBody::from_shape(o.shape, o.material, o.mass);
      const std::string key = body_key(body, p.state);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, simulate_object(p.state, body, env, opt.simulation)).first;
      run = it->second;
    }
    run.fate.id = o.id;
    run.fate.name = o.name;

    for (const ConfigObject* child : config.children(o.id)) {
      if (child->role != Role::kSubComponent) continue;
      if (run.fate.outcome == Outcome::kDemised) {
        ReentryState cs = run.fate.final_state;
        cs.mass = child->mass;
        cs.wall_temperature = opt.component_temperature;
        cs.melt_fraction = 0.0;
        queue.push_back({child->id, cs});
      } else {
        // Still inside a surviving parent: lands with it, unmelted.
        ObjectRun sub;
        sub.fate = run.fate;
        sub.fate.id = child->id;
        sub.fate.name = child->name;
        sub.fate.initial_mass = child->mass;
        sub.fate.final_mass = child->mass;
        sub.fate.final_cross_section = shape_geometry(child->shape).mean_cross_section;
        sub.fate.impact_energy = 0.5 * child->mass * run.fate.final_state.velocity * run.fate.final_state.velocity;
        report.objects.push_back(std::move(sub));
      }
    }
    report.objects.push_back(std::move(run));
  }
  std::sort(report.objects.begin(), report.objects.end(),
            [](const ObjectRun& a, const ObjectRun& b) { return a.fate.id < b.fate.id; });
  report.parent = std::move(parent);
  return report;
}

ReentryReport simulate_reentry(const SpacecraftConfig& config, const EntryConditions& entry,
                               const ReentryEnvironment& env, const ReentryOptions& options) {
  return simulate_release_phase(config, simulate_parent_phase(config, entry, env, options), env, options);
}

double liquid_mass_fraction(std::span<const ObjectFate> fates, std::span<const int> scope) {
  double m_in = 0.0, m_fin = 0.0;
  std::size_t count = 0;
  for (const ObjectFate& f : fates) {
    if (!scope.empty() && std::find(scope.begin(), scope.end(), f.id) == scope.end()) continue;
    m_in += f.initial_mass;
    m_fin += f.final_mass;
    ++count;
  }
  if (count == 0) throw Error("demise", "liquid mass fraction of an empty report");
  if (!(m_in > 0.0)) throw Error("demise", "liquid mass fraction needs positive initial mass");
  return std::clamp(1.0 - m_fin / m_in, 0.0, 1.0);
}

double liquid_mass_fraction(const ReentryReport& report, std::span<const int> scope) {
  std::vector<ObjectFate> fates;
  fates.reserve(report.objects.size());
  for (const ObjectRun& r : report.objects) fates.push_back(r.fate);
  return liquid_mass_fraction(fates, scope);
}

std::string trace_to_csv(const std::vector<TracePoint>& trace) {
  std::ostringstream os;
  os << "t_s,h_m,V_ms,gamma_deg,m_kg,Tw_K\n";
  char buf[200];
  for (const TracePoint& p : trace) {
    std::snprintf(buf, sizeof buf, "%.3f,%.3f,%.4f,%.5f,%.8g,%.3f\n", p.time, p.altitude, p.velocity,
                  p.flight_path_angle / kDeg, p.mass, p.wall_temperature);
    os << buf;
  }
  return os.str();
}

}  // namespace desurv
