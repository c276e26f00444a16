#include "desurv/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace desurv {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0, b5 = -2187.0 / 6784.0,
                 b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

void DormandPrince::resize(std::size_t n) {
  for (auto& k : k_) k.resize(n);
  tmp_.resize(n);
}

bool DormandPrince::step(const Derivative& f, double t, std::span<const double> y, double h,
                         std::span<double> out, std::span<double> err) {
  const std::size_t n = y.size();
  resize(n);
  auto eval = [&](double tt, std::vector<double>& k) { return f(tt, tmp_, k) && all_finite(k); };

  std::copy(y.begin(), y.end(), tmp_.begin());
  if (!eval(t, k_[0])) return false;
  for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * a21 * k_[0][i];
  if (!eval(t + c2 * h, k_[1])) return false;
  for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * (a31 * k_[0][i] + a32 * k_[1][i]);
  if (!eval(t + c3 * h, k_[2])) return false;
  for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + h * (a41 * k_[0][i] + a42 * k_[1][i] + a43 * k_[2][i]);
  if (!eval(t + c4 * h, k_[3])) return false;
  for (std::size_t i = 0; i < n; ++i) {
    tmp_[i] = y[i] + h * (a51 * k_[0][i] + a52 * k_[1][i] + a53 * k_[2][i] + a54 * k_[3][i]);
  }
  if (!eval(t + c5 * h, k_[4])) return false;
  for (std::size_t i = 0; i < n; ++i) {
    tmp_[i] = y[i] + h * (a61 * k_[0][i] + a62 * k_[1][i] + a63 * k_[2][i] + a64 * k_[3][i] + a65 * k_[4][i]);
  }
  if (!eval(t + h, k_[5])) return false;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = y[i] + h * (b1 * k_[0][i] + b3 * k_[2][i] + b4 * k_[3][i] + b5 * k_[4][i] + b6 * k_[5][i]);
  }
  if (err.empty()) return all_finite(out);
  std::copy(out.begin(), out.end(), tmp_.begin());
  if (!eval(t + h, k_[6])) return false;
  for (std::size_t i = 0; i < n; ++i) {
    err[i] = h * (e1 * k_[0][i] + e3 * k_[2][i] + e4 * k_[3][i] + e5 * k_[4][i] + e6 * k_[5][i] + e7 * k_[6][i]);
  }
  return all_finite(out);
}

IntegrationResult DormandPrince::integrate(const Derivative& f, double t0, StateVector y0, double t_end,
                                           std::span<const TerminalEvent> events, const StepObserver& on_step,
                                           const Projection& project) {
  IntegrationResult res;
  res.t = t0;
  res.y = std::move(y0);
  const std::size_t n = res.y.size();

  if (on_step) on_step(res.t, res.y);
  for (const auto& ev : events) {
    if (ev.g(res.t, res.y) <= 0.0) {
      res.status = IntegrationStatus::kEvent;
      res.event_id = ev.id;
      return res;
    }
  }

  StateVector y1(n), err(n), probe(n);
  double h = std::min(opt_.initial_step, opt_.max_step);
  while (true) {
    if (res.t >= t_end) {
      res.status = IntegrationStatus::kReachedEnd;
      return res;
    }
    if (res.steps >= opt_.max_steps) {
      res.status = IntegrationStatus::kMaxSteps;
      return res;
    }
    if (h < opt_.min_step) {
      res.status = IntegrationStatus::kStepUnderflow;
      return res;
    }
    const bool last = res.t + h >= t_end;
    const double hh = last ? t_end - res.t : h;

    if (!step(f, res.t, res.y, hh, y1, err)) {
      ++res.rejected;
      h = 0.5 * hh;
      continue;
    }
    double enorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sc = opt_.abs_tol + opt_.rel_tol * std::max(std::abs(res.y[i]), std::abs(y1[i]));
      enorm = std::max(enorm, std::abs(err[i]) / sc);
    }
    if (enorm > 1.0) {
      ++res.rejected;
      h = hh * std::max(0.2, 0.9 * std::pow(enorm, -0.2));
      continue;
    }
    if (project) project(y1);

    // Earliest terminal event inside the accepted step. When several fire,
    // each is located to time precision so they can be ranked.
    int fired = -1;
    double best_theta = 2.0;
    StateVector best_state;
    std::size_t crossings = 0;
    for (const auto& ev : events) crossings += ev.g(res.t + hh, y1) <= 0.0 ? 1 : 0;
    for (const auto& ev : events) {
      if (ev.g(res.t + hh, y1) > 0.0) continue;
      double lo = 0.0, hi = 1.0;
      StateVector hi_state = y1;
      for (int it = 0; it < 200; ++it) {
        if (crossings == 1 && std::abs(ev.g(res.t + hi * hh, hi_state)) <= ev.resolution) break;
        if ((hi - lo) * hh <= 1e-12 * (1.0 + std::abs(res.t))) break;
        const double mid = 0.5 * (lo + hi);
        if (!step(f, res.t, res.y, mid * hh, probe)) {
          lo = mid;  // treat as not yet crossed
          continue;
        }
        if (project) project(probe);
        if (ev.g(res.t + mid * hh, probe) > 0.0) {
          lo = mid;
        } else {
          hi = mid;
          hi_state = probe;
        }
      }
      if (hi < best_theta) {
        best_theta = hi;
        fired = ev.id;
        best_state = std::move(hi_state);
      }
    }

    ++res.steps;
    if (fired >= 0) {
      res.t += best_theta * hh;
      res.y = std::move(best_state);
      if (on_step) on_step(res.t, res.y);
      res.status = IntegrationStatus::kEvent;
      res.event_id = fired;
      return res;
    }
    res.t = last ? t_end : res.t + hh;
    std::swap(res.y, y1);
    if (on_step) on_step(res.t, res.y);
    const double grow = enorm == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(enorm, -0.2));
    h = std::min(opt_.max_step, hh * std::max(1.0, grow));
  }
}

}  // namespace desurv
