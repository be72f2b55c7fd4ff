#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loewner/error.hpp"
#include "loewner/kappa.hpp"
#include "loewner/quadrature.hpp"
#include "loewner/rng.hpp"
#include "loewner/special_fn.hpp"

// Stationary law of T: density C (1 + kappa T^2)^{-4/kappa}, finite only for
// kappa < 8, the general solution of the stationary forward equation, and
// the law of the argument theta = arccot(sqrt(kappa) T).

namespace loewner {

namespace detail {

inline void require_normalizable(const Kappa& kappa) {
  if (!kappa.subcritical()) {
    fail(ErrorCode::non_normalizable, "stationary density is not integrable for kappa = " + kappa.to_string() +
                                          " (tail exponent 8/kappa <= 1)");
  }
}

/// Root of an increasing function on [lo, hi] with h(lo) <= 0 <= h(hi):
/// Newton steps, falling back to bisection when a step leaves the bracket.
template <class H, class D>
double solve_increasing(H&& h, D&& dh, double lo, double hi) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double v = h(x);
    if (v == 0.0) return x;
    (v < 0.0 ? lo : hi) = x;
    const double d = dh(x);
    double next = d > 0.0 ? x - v / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x)) || hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace detail

/// Closed-form 1/C = sqrt(pi) Gamma(4/kappa - 1/2) / (sqrt(kappa) Gamma(4/kappa)).
inline double inverse_normalization_closed_form(const Kappa& kappa) {
  detail::require_normalizable(kappa);
  const double m = kappa.four_over();
  const auto num = special::lgamma_signed(m - 0.5);
  const auto den = special::lgamma_signed(m);
  return std::sqrt(std::numbers::pi / kappa.value()) * std::exp(num.log_abs - den.log_abs);
}

/// The normalized stationary law. Construction integrates the density once
/// and caches cumulative integrals on a node table; pdf/cdf/quantile are then
/// cheap and the object is immutable.
///
/// The half-line [0, inf) is split at 1. On [1, inf) the substitution
/// T = v^{-p}, p = 1 / (8/kappa - 1), turns the integrand into the bounded
/// p (kappa + v^{2p})^{-4/kappa} on v in (0, 1], which stays well behaved as
/// kappa approaches 8.
class StationaryLaw {
 public:
  explicit StationaryLaw(const Kappa& kappa) : kappa_(kappa), m_(kappa.four_over()) {
    detail::require_normalizable(kappa);
    p_ = 1.0 / (2.0 * m_ - 1.0);
    head_[0] = tail_[0] = 0.0;
    for (int j = 1; j <= nodes; ++j) {
      head_[j] = head_[j - 1] + integrate([this](double T) { return density_shape(T); }, node(j - 1), node(j));
      tail_[j] = tail_[j - 1] + integrate([this](double v) { return tail_integrand(v); }, node(j - 1), node(j));
    }
    half_mass_ = head_[nodes] + tail_[nodes];
    c_ = 0.5 / half_mass_;
  }

  const Kappa& kappa() const { return kappa_; }
  /// m = 4 / kappa.
  double exponent() const { return m_; }
  double normalization() const { return c_; }
  double inverse_normalization() const { return 2.0 * half_mass_; }

  double pdf(double T) const { return c_ * density_shape(T); }

  double cdf(double T) const {
    if (T < 0.0) return c_ * upper(-T);
    if (T < 1.0) return 0.5 + c_ * lower(T);
    return 1.0 - c_ * upper(T);
  }

  double quantile(double prob) const {
    require(prob > 0.0 && prob < 1.0, "quantile level must lie in (0, 1)");
    if (prob == 0.5) return 0.0;
    const double a = upper_inverse((prob > 0.5 ? 1.0 - prob : prob) / c_);
    return prob > 0.5 ? a : -a;
  }

  /// Density of theta = arccot(sqrt(kappa) T) on (0, pi): Ct sin^{8/kappa - 2}(theta)
  /// with Ct = C / sqrt(kappa).
  double argument_pdf(double theta) const {
    require(theta > 0.0 && theta < std::numbers::pi, "argument must lie in (0, pi)");
    return c_ / kappa_.sqrt() * std::pow(std::sin(theta), 2.0 * m_ - 2.0);
  }

  /// P(theta' <= theta); theta is decreasing in T.
  double argument_cdf(double theta) const {
    if (theta <= 0.0) return 0.0;
    if (theta >= std::numbers::pi) return 1.0;
    return 1.0 - cdf(std::cos(theta) / std::sin(theta) / kappa_.sqrt());
  }

 private:
  static constexpr int nodes = 64;
  static double node(int j) { return static_cast<double>(j) / nodes; }

  double density_shape(double T) const { return std::pow(1.0 + kappa_.value() * T * T, -m_); }
  double tail_integrand(double v) const { return p_ * std::pow(kappa_.value() + std::pow(v, 2.0 * p_), -m_); }

  /// int_0^a shape, 0 <= a <= 1.
  double lower(double a) const {
    const int j = std::min(static_cast<int>(a * nodes), nodes);
    return head_[j] + integrate([this](double T) { return density_shape(T); }, node(j), a);
  }

  /// int_0^v tail_integrand, 0 <= v <= 1.
  double tail_lower(double v) const {
    const int j = std::min(static_cast<int>(v * nodes), nodes);
    return tail_[j] + integrate([this](double w) { return tail_integrand(w); }, node(j), v);
  }

  /// int_a^inf shape, a >= 0.
  double upper(double a) const {
    if (a < 1.0) return head_[nodes] - lower(a) + tail_[nodes];
    return tail_lower(std::pow(a, -1.0 / p_));
  }

  /// a >= 0 with upper(a) = target, 0 < target < half_mass_.
  double upper_inverse(double target) const {
    if (target <= tail_[nodes]) {
      // Solve in v, where T = v^{-p}.
      const int j = static_cast<int>(std::upper_bound(tail_.begin(), tail_.end(), target) - tail_.begin()) - 1;
      const double lo = node(std::clamp(j, 0, nodes - 1));
      const double hi = node(std::clamp(j + 1, 1, nodes));
      const double v = detail::solve_increasing([&](double w) { return tail_lower(w) - target; },
                                                [&](double w) { return tail_integrand(w); }, lo, hi);
      return std::pow(v, -p_);
    }
    const double goal = half_mass_ - target;  // int_0^a shape
    const int j = static_cast<int>(std::upper_bound(head_.begin(), head_.end(), goal) - head_.begin()) - 1;
    const double lo = node(std::clamp(j, 0, nodes - 1));
    const double hi = node(std::clamp(j + 1, 1, nodes));
    return detail::solve_increasing([&](double a) { return lower(a) - goal; },
                                    [&](double a) { return density_shape(a); }, lo, hi);
  }

  Kappa kappa_;
  double m_;
  double p_ = 1.0;
  std::array<double, nodes + 1> head_{};
  std::array<double, nodes + 1> tail_{};
  double half_mass_ = 0.0;
  double c_ = 0.0;
};

/// Normalizing constant C by quadrature.
inline double normalization(const Kappa& kappa) { return StationaryLaw(kappa).normalization(); }

inline double pdf(double T, const Kappa& kappa) { return StationaryLaw(kappa).pdf(T); }
inline double cdf(double T, const Kappa& kappa) { return StationaryLaw(kappa).cdf(T); }

inline double argument_pdf(double theta, const Kappa& kappa) { return StationaryLaw(kappa).argument_pdf(theta); }

/// n i.i.d. draws by inverting the cdf at counter-based uniforms.
inline std::vector<double> sample_stationary(const StationaryLaw& law, std::size_t n, std::uint64_t seed) {
  require(n >= 1, "sample size must be positive");
  const rng::GaussianCounter source(seed, 0);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = source.uniforms(i / 2);
    out[i] = law.quantile(u[i % 2] + 0x1.0p-54);
  }
  return out;
}

inline std::vector<double> sample_stationary(const Kappa& kappa, std::size_t n, std::uint64_t seed) {
  return sample_stationary(StationaryLaw(kappa), n, seed);
}

/// First fundamental solution T (1 + kappa T^2)^{-4/kappa} 2F1(1/2, -4/kappa; 3/2; -kappa T^2).
inline double first_solution(double T, const Kappa& kappa) {
  const double m = kappa.four_over();
  const double x = -kappa.value() * T * T;
  return T * std::pow(1.0 - x, -m) * special::hyp2f1(0.5, -m, 1.5, x).value;
}

/// C1 * first_solution + 2 C2 (1 + kappa T^2)^{-4/kappa}.
inline double general_solution(double T, const Kappa& kappa, double C1, double C2) {
  double value = 2.0 * C2 * std::pow(1.0 + kappa.value() * T * T, -kappa.four_over());
  if (C1 != 0.0) value += C1 * first_solution(T, kappa);
  return value;
}

/// Left-hand side of the stationary forward equation
///   rho''/2 + 4T/(kappa T^2 + 1) rho' + (4 - 4 kappa T^2)/(kappa T^2 + 1)^2 rho.
/// The closed-form part is differentiated exactly; the hypergeometric part by
/// 5-point central differences with step 1e-4 max(1, |T|).
inline double kfe_residual(const Kappa& kappa, double T, double C1, double C2) {
  const double k = kappa.value();
  const double m = kappa.four_over();
  const double s = 1.0 + k * T * T;

  const double q = std::pow(s, -m);
  const double dq = -2.0 * m * k * T * std::pow(s, -m - 1.0);
  const double d2q = -2.0 * m * k * std::pow(s, -m - 1.0) + 4.0 * m * (m + 1.0) * k * k * T * T * std::pow(s, -m - 2.0);
  double rho = 2.0 * C2 * q;
  double drho = 2.0 * C2 * dq;
  double d2rho = 2.0 * C2 * d2q;

  if (C1 != 0.0) {
    const double h = 1e-4 * std::max(1.0, std::abs(T));
    const double f0 = first_solution(T, kappa);
    const double fp1 = first_solution(T + h, kappa), fm1 = first_solution(T - h, kappa);
    const double fp2 = first_solution(T + 2 * h, kappa), fm2 = first_solution(T - 2 * h, kappa);
    rho += C1 * f0;
    drho += C1 * (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    d2rho += C1 * (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  }
  return 0.5 * d2rho + 4.0 * T / s * drho + (4.0 - 4.0 * k * T * T) / (s * s) * rho;
}

struct PhaseRow {
  Kappa kappa;
  double exponent;  // 8 / kappa
  bool normalizable;
  std::optional<double> inverse_normalization;
};

inline std::vector<PhaseRow> phase_scan(std::span<const Kappa> grid) {
  std::vector<PhaseRow> rows;
  rows.reserve(grid.size());
  for (const Kappa& k : grid) {
    PhaseRow row{k, k.tail_exponent(), k.subcritical(), std::nullopt};
    if (row.normalizable) row.inverse_normalization = StationaryLaw(k).inverse_normalization();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace loewner
