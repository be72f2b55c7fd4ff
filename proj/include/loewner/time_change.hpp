#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "loewner/error.hpp"
#include "loewner/kappa.hpp"
#include "loewner/loewner_flow.hpp"

// The random clock u(t) = int_0^t ds / y_s^2, its inverse c(u), and the
// diffusion T_u = D_{c(u)} / sqrt(kappa) read off a flow path.

namespace loewner {

struct TimeChangeMap {
  std::vector<double> t_grid;
  std::vector<double> u_values;

  double max_u() const { return u_values.empty() ? 0.0 : u_values.back(); }
};

enum class DiffusionOrigin { direct_sde, extracted_from_flow };

inline const char* to_string(DiffusionOrigin o) {
  return o == DiffusionOrigin::direct_sde ? "direct_sde" : "extracted_from_flow";
}

struct DiffusionPath {
  Kappa kappa{4.0};
  double du = 0.0;
  std::vector<double> u_grid;
  std::vector<double> T_values;
  DiffusionOrigin origin = DiffusionOrigin::direct_sde;
  std::uint64_t seed = 0;
};

/// Cumulative trapezoidal integral of 1/y^2 over the path's grid.
inline TimeChangeMap u_tilde(const FlowPath& path) {
  require(!path.states.empty(), "empty flow path");
  TimeChangeMap map;
  map.t_grid.reserve(path.states.size());
  map.u_values.reserve(path.states.size());
  double u = 0.0;
  double prev_inv = 1.0 / (path.states.front().y * path.states.front().y);
  map.t_grid.push_back(path.states.front().t);
  map.u_values.push_back(0.0);
  for (std::size_t k = 1; k < path.states.size(); ++k) {
    const FlowState& s = path.states[k];
    const double inv = 1.0 / (s.y * s.y);
    u += 0.5 * (s.t - path.states[k - 1].t) * (prev_inv + inv);
    prev_inv = inv;
    map.t_grid.push_back(s.t);
    map.u_values.push_back(u);
  }
  return map;
}

/// Grid segment [index, index + 1] holding clock level u, and the linear
/// position of u inside it.
struct Bracket {
  std::size_t index;
  double fraction;
};

inline Bracket locate_clock(const TimeChangeMap& map, double u) {
  require(!map.u_values.empty(), "empty time change map");
  require(std::isfinite(u) && u >= 0.0, "clock level must be nonnegative");
  if (u > map.max_u()) {
    fail(ErrorCode::horizon_exceeded,
         "clock level " + std::to_string(u) + " beyond simulated range " + std::to_string(map.max_u()));
  }
  const auto& uv = map.u_values;
  const auto it = std::upper_bound(uv.begin(), uv.end(), u);
  if (it == uv.end()) return {uv.size() - 1, 0.0};
  const auto i = static_cast<std::size_t>(it - uv.begin()) - 1;
  return {i, (u - uv[i]) / (uv[i + 1] - uv[i])};
}

/// c(u) = inf{t : u(t) >= u}, piecewise linear between grid points.
inline double inverse_c(const TimeChangeMap& map, double u) {
  const Bracket b = locate_clock(map, u);
  if (b.fraction == 0.0) return map.t_grid[b.index];
  return map.t_grid[b.index] + b.fraction * (map.t_grid[b.index + 1] - map.t_grid[b.index]);
}

/// First time the clock reaches `level`.
inline double hitting_time(const TimeChangeMap& map, double level) { return inverse_c(map, level); }

/// Default embedding levels a_n = log(1 + 4n / kappa).
inline double schedule_a(const Kappa& kappa, std::int64_t n) {
  require(n >= 1, "schedule index must be positive");
  return std::log1p(static_cast<double>(n) * kappa.four_over());
}

/// Flow state at c(u), interpolated linearly in t.
inline FlowState state_at_clock(const FlowPath& path, const TimeChangeMap& map, double u) {
  require(path.states.size() == map.u_values.size(), "time change map does not match the path");
  const Bracket b = locate_clock(map, u);
  const FlowState& lo = path.states[b.index];
  if (b.fraction == 0.0) return lo;
  const FlowState& hi = path.states[b.index + 1];
  const double w = b.fraction;
  return {lo.t + w * (hi.t - lo.t), lo.x + w * (hi.x - lo.x), lo.y + w * (hi.y - lo.y)};
}

/// T_u = cot(arg z_{c(u)}) / sqrt(kappa) on the requested clock grid.
inline DiffusionPath extract_T(const FlowPath& path, const TimeChangeMap& map, std::span<const double> u_grid) {
  DiffusionPath out;
  out.kappa = path.kappa;
  out.origin = DiffusionOrigin::extracted_from_flow;
  out.seed = path.seed;
  out.du = u_grid.size() > 1 ? u_grid[1] - u_grid[0] : 0.0;
  out.u_grid.assign(u_grid.begin(), u_grid.end());
  out.T_values.reserve(u_grid.size());
  const double root = path.kappa.sqrt();
  for (double u : u_grid) out.T_values.push_back(cot_arg(state_at_clock(path, map, u)) / root);
  return out;
}

}  // namespace loewner
