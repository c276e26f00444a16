#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace desurv {

struct IntegratorOptions {
  double abs_tol = 1e-8;
  double rel_tol = 1e-6;
  double initial_step = 0.1;  ///< s
  double max_step = 60.0;     ///< s
  double min_step = 1e-9;     ///< s; smaller steps count as underflow
  std::size_t max_steps = 5'000'000;
};

using StateVector = std::vector<double>;

/// Writes dy/dt. Returns false when the derivative is not finite at (t, y);
/// the integrator then rejects the step and retries with a smaller one.
using Derivative = std::function<bool(double t, std::span<const double> y, std::span<double> dydt)>;

/// Terminal event: fires when g changes from positive to <= 0. The crossing
/// is bisected until |g| <= resolution (or the time bracket collapses). When
/// several events fire in one step each is bisected to time precision.
struct TerminalEvent {
  int id = 0;
  std::function<double(double t, std::span<const double> y)> g;
  double resolution = 0.0;
};

enum class IntegrationStatus { kReachedEnd, kEvent, kStepUnderflow, kMaxSteps };

struct IntegrationResult {
  IntegrationStatus status = IntegrationStatus::kReachedEnd;
  double t = 0.0;
  StateVector y;        ///< state at t (last valid state on failure)
  int event_id = -1;    ///< set when status == kEvent
  std::size_t steps = 0;
  std::size_t rejected = 0;
};

/// Adaptive Dormand-Prince 5(4) integrator with local extrapolation and
/// max-norm error control.
class DormandPrince {
 public:
  using StepObserver = std::function<void(double t, std::span<const double> y)>;
  /// Applied to every accepted state before events are checked.
  using Projection = std::function<void(std::span<double> y)>;

  explicit DormandPrince(IntegratorOptions options = {}) : opt_(options) {}

  const IntegratorOptions& options() const { return opt_; }

  IntegrationResult integrate(const Derivative& f, double t0, StateVector y0, double t_end,
                              std::span<const TerminalEvent> events = {},
                              const StepObserver& on_step = {}, const Projection& project = {});

  /// One explicit step of size h without error control. Returns false if a
  /// stage derivative was not finite. `err` receives the embedded error
  /// estimate when non-empty.
  bool step(const Derivative& f, double t, std::span<const double> y, double h, std::span<double> out,
            std::span<double> err = {});

 private:
  void resize(std::size_t n);

  IntegratorOptions opt_;
  std::vector<double> k_[7];
  std::vector<double> tmp_;
};

}  // namespace desurv
