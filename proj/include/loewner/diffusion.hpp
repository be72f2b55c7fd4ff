#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "loewner/error.hpp"
#include "loewner/kappa.hpp"
#include "loewner/rng.hpp"
#include "loewner/time_change.hpp"

// The time-changed diffusion dT = -4T / (1 + kappa T^2) du + dW and its
// classical one-dimensional description (scale function, speed measure).

namespace loewner {

struct DiffusionSpec {
  Kappa kappa{4.0};
  double T0 = 0.0;
  double du = 1e-3;
  double u_max = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t path_index = 0;
  bool zero_noise = false;

  void validate() const {
    require(std::isfinite(T0) && std::isfinite(du) && std::isfinite(u_max), "diffusion spec must be finite");
    require(du > 0.0, "du must be positive");
    require(u_max >= du, "u_max must be at least one step");
  }

  std::size_t steps() const {
    const double r = u_max / du;
    return static_cast<std::size_t>(std::ceil(r - 1e-9 * r));
  }
};

/// Odd, with |drift_T| <= 2 / sqrt(kappa) attained at T = 1 / sqrt(kappa).
inline double drift_T(double T, const Kappa& kappa) { return -4.0 * T / (1.0 + kappa.value() * T * T); }

inline DiffusionPath simulate_T(const DiffusionSpec& spec) {
  spec.validate();
  const std::size_t n = spec.steps();
  DiffusionPath path{spec.kappa, spec.du, {}, {}, DiffusionOrigin::direct_sde, spec.seed};
  path.u_grid.resize(n + 1);
  path.T_values.resize(n + 1);
  rng::GaussianStream noise(spec.seed, spec.path_index);
  const double sd = std::sqrt(spec.du);
  double T = spec.T0;
  path.u_grid[0] = 0.0;
  path.T_values[0] = T;
  for (std::size_t k = 1; k <= n; ++k) {
    const double dW = spec.zero_noise ? 0.0 : sd * noise.next();
    T += spec.du * drift_T(T, spec.kappa) + dW;
    path.u_grid[k] = static_cast<double>(k) * spec.du;
    path.T_values[k] = T;
  }
  return path;
}

/// Same recursion as simulate_T, keeping only the terminal value.
inline double simulate_T_terminal(const DiffusionSpec& spec) {
  spec.validate();
  const std::size_t n = spec.steps();
  rng::GaussianStream noise(spec.seed, spec.path_index);
  const double sd = std::sqrt(spec.du);
  const double kv = spec.kappa.value();
  double T = spec.T0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dW = spec.zero_noise ? 0.0 : sd * noise.next();
    T += spec.du * (-4.0 * T / (1.0 + kv * T * T)) + dW;
  }
  return T;
}

/// Derivative of the scale function, s'(x) = (1 + kappa x^2)^{4/kappa}.
inline double scale_density(double x, const Kappa& kappa) {
  return std::pow(1.0 + kappa.value() * x * x, kappa.four_over());
}

/// Speed measure density up to a constant, 1 / s'(x) (unit diffusion coefficient).
inline double speed_density(double x, const Kappa& kappa) {
  return std::pow(1.0 + kappa.value() * x * x, -kappa.four_over());
}

/// The speed density decays like |x|^{-8/kappa}; finite mass iff 8/kappa > 1.
inline bool speed_measure_finite(const Kappa& kappa) { return kappa.subcritical(); }

/// Trapezoidal time average (1/u) int_0^u f(T_s) ds along the path.
template <class F>
double ergodic_average(const DiffusionPath& path, F&& f) {
  require(!path.T_values.empty() && path.T_values.size() == path.u_grid.size(), "malformed diffusion path");
  const std::size_t n = path.T_values.size();
  if (n == 1) return f(path.T_values[0]);
  double acc = 0.0;
  double prev = f(path.T_values[0]);
  for (std::size_t k = 1; k < n; ++k) {
    const double cur = f(path.T_values[k]);
    acc += 0.5 * (path.u_grid[k] - path.u_grid[k - 1]) * (prev + cur);
    prev = cur;
  }
  return acc / (path.u_grid.back() - path.u_grid.front());
}

}  // namespace loewner
