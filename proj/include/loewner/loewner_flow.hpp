#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "loewner/error.hpp"
#include "loewner/kappa.hpp"
#include "loewner/rng.hpp"

// Backward Loewner dynamics for z_t = h_t(z0) - sqrt(kappa) B_t,
//
//   dx = -2x / (x^2 + y^2) dt - sqrt(kappa) dB,   dy = 2y / (x^2 + y^2) dt.
//
// The imaginary part carries no noise and moves away from the real axis.

namespace loewner {

struct FlowState {
  double t = 0.0;
  double x = 0.0;
  double y = 1.0;
};

struct Drift {
  double dx;
  double dy;
};

enum class FlowGrid {
  uniform,  // t_k = k * dt
  scaled,   // t_{k+1} - t_k = dt * y_k^2, i.e. a fixed step of the clock u
};

/// A discretized trajectory. `driver_increments[k]` is the unscaled Brownian
/// increment used between states[k] and states[k + 1].
struct FlowPath {
  Kappa kappa{4.0};
  double dt = 0.0;  // uniform step, or relative step for FlowGrid::scaled
  FlowGrid grid = FlowGrid::uniform;
  std::vector<FlowState> states;
  std::vector<double> driver_increments;
  std::uint64_t seed = 0;
  std::uint64_t path_index = 0;

  double horizon() const { return states.empty() ? 0.0 : states.back().t; }
};

struct FlowOptions {
  double x0 = 0.0;
  double y0 = 1.0;
  bool zero_noise = false;
  std::uint64_t path_index = 0;
};

inline Drift drift(const FlowState& s) {
  const double r2 = s.x * s.x + s.y * s.y;
  return {-2.0 * s.x / r2, 2.0 * s.y / r2};
}

/// One Euler-Maruyama step. The imaginary part is advanced through y^2,
/// whose drift 4 y^2 / |z|^2 is bounded by 4, so y^2 <= y0^2 + 4t holds on the
/// discrete grid exactly and y strictly increases.
inline FlowState step(const FlowState& s, double dB, double dt, const Kappa& kappa) {
  require(s.y > 0.0, "flow state must lie in the upper half-plane");
  require(dt > 0.0 && std::isfinite(dt), "step size must be positive");
  const double r2 = s.x * s.x + s.y * s.y;
  const double y2 = s.y * s.y;
  return {s.t + dt, s.x - 2.0 * s.x / r2 * dt - kappa.sqrt() * dB,
          std::sqrt(y2 + 4.0 * y2 / r2 * dt)};
}

/// Cotangent of the argument, x / y.
inline double cot_arg(const FlowState& s) { return s.x / s.y; }

namespace detail {

inline void check_start(const FlowOptions& opt) {
  require(std::isfinite(opt.x0) && std::isfinite(opt.y0) && opt.y0 > 0.0,
          "initial point must lie in the upper half-plane");
}

inline std::size_t uniform_steps(double horizon, double dt) {
  const double r = horizon / dt;
  return static_cast<std::size_t>(std::ceil(r - 1e-9 * r));
}

}  // namespace detail

/// Flow on a uniform grid driven by a caller-supplied sequence of unscaled
/// Brownian increments. The same driver can be replayed for several kappa.
inline FlowPath simulate_flow_driven(const Kappa& kappa, double dt, std::span<const double> increments,
                                     const FlowOptions& opt = {}) {
  require(dt > 0.0 && std::isfinite(dt), "dt must be finite and positive");
  detail::check_start(opt);
  FlowPath path{kappa, dt, FlowGrid::uniform, {}, {increments.begin(), increments.end()}, 0, opt.path_index};
  path.states.reserve(increments.size() + 1);
  FlowState s{0.0, opt.x0, opt.y0};
  path.states.push_back(s);
  for (std::size_t k = 0; k < increments.size(); ++k) {
    s = step(s, increments[k], dt, kappa);
    s.t = static_cast<double>(k + 1) * dt;  // no drift in the time grid
    path.states.push_back(s);
  }
  return path;
}

/// Flow from z0 (default i) on the uniform grid k*dt, with ceil(horizon/dt)
/// steps and increments N(0, dt) keyed by (seed, path_index, step).
inline FlowPath simulate_flow(const Kappa& kappa, double horizon, double dt, std::uint64_t seed,
                              const FlowOptions& opt = {}) {
  require(std::isfinite(horizon) && std::isfinite(dt), "flow parameters must be finite");
  require(dt > 0.0, "dt must be positive");
  require(horizon >= dt, "horizon must be at least one step");
  const std::size_t n = detail::uniform_steps(horizon, dt);
  std::vector<double> dB(n, 0.0);
  if (!opt.zero_noise) {
    rng::GaussianStream noise(seed, opt.path_index);
    const double sd = std::sqrt(dt);
    for (auto& v : dB) v = sd * noise.next();
  }
  FlowPath path = simulate_flow_driven(kappa, dt, dB, opt);
  path.seed = seed;
  return path;
}

/// Stopping rule for simulate_flow_scaled: stop once t reaches `horizon`
/// (the last step is shortened to land on it) or once the running clock
/// int dt / y^2 reaches `clock` (the last step may overshoot it).
struct ScaledStop {
  double horizon = std::numeric_limits<double>::infinity();
  double clock = std::numeric_limits<double>::infinity();
};

/// Flow with steps dt_k = relative_step * y_k^2. The flow is invariant under
/// z -> lambda z, t -> lambda^2 t, so this is a uniform step in the intrinsic
/// time scale; reaching clock level u costs about u / relative_step steps
/// while y grows exponentially in u.
inline FlowPath simulate_flow_scaled(const Kappa& kappa, double relative_step, ScaledStop stop,
                                     std::uint64_t seed, const FlowOptions& opt = {}) {
  require(std::isfinite(relative_step) && relative_step > 0.0, "relative step must be finite and positive");
  require(stop.horizon > 0.0 && stop.clock > 0.0, "stopping levels must be positive");
  require(std::isfinite(stop.horizon) || std::isfinite(stop.clock), "scaled flow needs a finite stopping level");
  detail::check_start(opt);

  FlowPath path{kappa, relative_step, FlowGrid::scaled, {}, {}, seed, opt.path_index};
  rng::GaussianStream noise(seed, opt.path_index);
  FlowState s{0.0, opt.x0, opt.y0};
  path.states.push_back(s);
  double clock = 0.0;
  while (s.t < stop.horizon && clock < stop.clock) {
    double dt = relative_step * s.y * s.y;
    const bool last = s.t + dt >= stop.horizon * (1.0 - 1e-14);
    if (last) dt = stop.horizon - s.t;
    const double z = noise.next();
    const double dB = opt.zero_noise ? 0.0 : std::sqrt(dt) * z;
    const FlowState prev = s;
    s = step(s, dB, dt, kappa);
    if (last) s.t = stop.horizon;
    clock += 0.5 * dt * (1.0 / (prev.y * prev.y) + 1.0 / (s.y * s.y));
    path.driver_increments.push_back(dB);
    path.states.push_back(s);
  }
  return path;
}

/// State at capacity time t by linear interpolation between grid points.
inline FlowState state_at(const FlowPath& path, double t) {
  require(!path.states.empty(), "empty flow path");
  require(t >= 0.0 && t <= path.horizon(), "time outside the simulated range");
  const auto it = std::upper_bound(path.states.begin(), path.states.end(), t,
                                   [](double v, const FlowState& s) { return v < s.t; });
  if (it == path.states.end()) return path.states.back();
  const FlowState& hi = *it;
  const FlowState& lo = *(it - 1);
  const double w = (t - lo.t) / (hi.t - lo.t);
  return {t, lo.x + w * (hi.x - lo.x), lo.y + w * (hi.y - lo.y)};
}

}  // namespace loewner
