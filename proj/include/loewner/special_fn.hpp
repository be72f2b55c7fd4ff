#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>

#include <boost/math/special_functions/gamma.hpp>

#include "loewner/error.hpp"

// Real-argument Gauss hypergeometric function 2F1(a, b; c; x) for x <= 0
// (and |x| < 1), together with the Pochhammer symbol and digamma it needs.
//
// Branches:
//   terminating  a or b a nonpositive integer; exact polynomial, any x
//   series       |x| < 1 (x in [-1, -1/2) through the Pfaff transformation)
//   connection   x < -1, a - b not an integer (DLMF 15.8.2);
//                within 1e-5 of an integer, interpolated across the log case
//   logarithmic  x < -1, a - b an integer (DLMF 15.8.8)

namespace loewner::special {

/// Parameters within this distance of an integer are treated as integers.
inline constexpr double integer_tolerance = 1e-12;

inline bool near_integer(double x, double tol = integer_tolerance) {
  return std::abs(x - std::round(x)) <= tol;
}

inline bool is_nonpositive_integer(double x, double tol = 0.0) {
  return std::round(x) <= 0.0 && near_integer(x, tol);
}

/// Rising factorial (a)_k.
inline double pochhammer(double a, unsigned k) {
  double p = 1.0;
  for (unsigned i = 0; i < k; ++i) p *= a + i;
  return p;
}

/// psi(x) = Gamma'(x) / Gamma(x): reflection below 1/2, upward recurrence to
/// x >= 10, then the Bernoulli asymptotic series.
inline double digamma(double x) {
  require(std::isfinite(x), "digamma argument must be finite");
  if (x <= 0.0 && x == std::floor(x)) fail(ErrorCode::pole, "digamma pole at " + std::to_string(x));
  if (x < 0.5) {
    const double r = x - std::floor(x);  // cot(pi x) has period 1
    return digamma(1.0 - x) - std::numbers::pi / std::tan(std::numbers::pi * r);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double f = 1.0 / (x * x);
  const double tail =
      f * (-1.0 / 12 +
           f * (1.0 / 120 +
                f * (-1.0 / 252 + f * (1.0 / 240 + f * (-1.0 / 132 + f * (691.0 / 32760 + f * (-1.0 / 12)))))));
  return acc + std::log(x) - 0.5 / x + tail;
}

/// log|Gamma(x)| with the sign of Gamma(x); x must not be a pole.
struct SignedLog {
  double log_abs;
  int sign;
};

inline SignedLog lgamma_signed(double x) {
  int sign = 1;
  const double l = boost::math::lgamma(x, &sign);
  return {l, sign};
}

/// 1 / Gamma(x), zero at the poles.
inline double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  const SignedLog g = lgamma_signed(x);
  return g.sign * std::exp(-g.log_abs);
}

enum class Hyp2F1Branch { series, terminating, connection, logarithmic };

inline const char* to_string(Hyp2F1Branch b) {
  switch (b) {
    case Hyp2F1Branch::series: return "series";
    case Hyp2F1Branch::terminating: return "terminating";
    case Hyp2F1Branch::connection: return "connection";
    case Hyp2F1Branch::logarithmic: return "logarithmic";
  }
  return "unknown";
}

struct Hyp2F1Eval {
  double a, b, c;
  double x;
  Hyp2F1Branch branch;
  double value;
};

namespace detail {

inline void check_c(double c) {
  if (is_nonpositive_integer(c, integer_tolerance)) {
    fail(ErrorCode::pole, "2F1 undefined for c = " + std::to_string(c));
  }
}

/// Within this distance of an integer a - b, the connection formula is
/// replaced by interpolation across the logarithmic case.
inline constexpr double bridge_half_width = 1e-5;

/// Snaps a parameter lying within tolerance of a nonpositive integer onto it.
inline double snap_nonpositive(double p) {
  return is_nonpositive_integer(p, integer_tolerance) ? std::round(p) : p;
}

/// Gamma(num0) Gamma(num1) / (Gamma(den0) Gamma(den1)); zero when a
/// denominator sits on a pole.
inline double gamma_ratio(double num0, double num1, double den0, double den1) {
  if (is_nonpositive_integer(den0) || is_nonpositive_integer(den1)) return 0.0;
  if (is_nonpositive_integer(num0) || is_nonpositive_integer(num1)) {
    fail(ErrorCode::pole, "gamma ratio numerator at a pole");
  }
  const SignedLog n0 = lgamma_signed(num0), n1 = lgamma_signed(num1);
  const SignedLog d0 = lgamma_signed(den0), d1 = lgamma_signed(den1);
  return n0.sign * n1.sign * d0.sign * d1.sign * std::exp(n0.log_abs + n1.log_abs - d0.log_abs - d1.log_abs);
}

}  // namespace detail

/// Partial sums of the Gauss series until the estimated relative tail drops
/// below 1e-16, or exactly when a or b is a nonpositive integer.
inline double hyp2f1_series(double a, double b, double c, double z) {
  require(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(z),
          "2F1 arguments must be finite");
  detail::check_c(c);
  const bool terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (!terminates && std::abs(z) >= 1.0) {
    fail(ErrorCode::divergent_region, "2F1 series diverges at z = " + std::to_string(z));
  }
  constexpr std::uint64_t max_terms = 50'000'000;
  double sum = 1.0;
  double term = 1.0;
  for (std::uint64_t k = 0; k < max_terms; ++k) {
    const double kd = static_cast<double>(k);
    const double ratio = (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    const double r = std::abs(ratio);
    if (!terminates && r < 1.0 && std::abs(term) * r / (1.0 - r) <= 1e-16 * std::abs(sum)) return sum;
  }
  fail(ErrorCode::divergent_region, "2F1 series did not converge at z = " + std::to_string(z));
}

inline Hyp2F1Eval hyp2f1(double a, double b, double c, double x);

/// Connection formula around infinity for a - b not an integer:
///   F(a,b;c;x) = G(c)G(b-a)/(G(b)G(c-a)) (-x)^{-a} F(a, a-c+1; a-b+1; 1/x)
///              + G(c)G(a-b)/(G(a)G(c-b)) (-x)^{-b} F(b, b-c+1; b-a+1; 1/x).
/// Valid for every x < 0; the inner functions go through hyp2f1().
inline double hyp2f1_connection(double a, double b, double c, double x) {
  require(std::isfinite(x) && x < 0.0, "connection formula needs x < 0");
  require(!near_integer(a - b), "connection formula needs a - b not an integer");
  detail::check_c(c);
  const double w = 1.0 / x;
  double value = 0.0;
  if (const double k1 = detail::gamma_ratio(c, b - a, b, c - a); k1 != 0.0) {
    value += k1 * std::pow(-x, -a) * hyp2f1(a, a - c + 1.0, a - b + 1.0, w).value;
  }
  if (const double k2 = detail::gamma_ratio(c, a - b, a, c - b); k2 != 0.0) {
    value += k2 * std::pow(-x, -b) * hyp2f1(b, b - c + 1.0, b - a + 1.0, w).value;
  }
  return value;
}

/// Integer-difference formula for |x| > 1 (b = a + m after ordering):
///   F/G(c) = (-x)^{-a}/G(a+m) sum_{k<m} (a)_k (m-k-1)! / (k! G(c-a-k)) x^{-k}
///          + (-x)^{-a}/G(a) sum_k (a+m)_k / (k! (k+m)! G(c-a-k-m)) (-1)^k x^{-k-m}
///            * [log(-x) + psi(k+1) + psi(k+m+1) - psi(a+k+m) - psi(c-a-k-m)].
/// Where c-a-k-m is a pole, psi/G is replaced by its limit (-1)^{n+1} n!.
inline double hyp2f1_logarithmic(double a, double b, double c, double x) {
  require(std::isfinite(x) && x < -1.0, "logarithmic formula needs x < -1");
  require(near_integer(a - b), "logarithmic formula needs a - b an integer");
  detail::check_c(c);
  if (b < a) std::swap(a, b);
  const auto m = static_cast<std::int64_t>(std::llround(b - a));
  b = a + static_cast<double>(m);
  require(!is_nonpositive_integer(a) && !is_nonpositive_integer(b),
          "logarithmic formula needs a nonterminating series");

  const double md = static_cast<double>(m);
  const double log_mz = std::log(-x);

  double finite = 0.0;
  {
    double poch = 1.0;  // (a)_k
    double xpow = 1.0;  // x^{-k}
    for (std::int64_t k = 0; k < m; ++k) {
      const double kd = static_cast<double>(k);
      finite += poch * std::tgamma(md - kd) / std::tgamma(kd + 1.0) * rgamma(c - a - kd) * xpow;
      poch *= a + kd;
      xpow /= x;
    }
  }

  // Log-series terms in log-magnitude form: 1/Gamma(c-a-k-m) grows
  // factorially while the Pochhammer/factorial quotient decays factorially.
  double series = 0.0;
  double log_poch = 0.0;  // log|(a+m)_k|
  int sign_poch = 1;
  const double log_abs_x = std::log(-x);
  int small_run = 0;
  constexpr std::int64_t max_terms = 5'000'000;
  for (std::int64_t k = 0; k < max_terms; ++k) {
    const double kd = static_cast<double>(k);
    const double log_a = log_poch - lgamma_signed(kd + 1.0).log_abs - lgamma_signed(kd + md + 1.0).log_abs - (kd + md) * log_abs_x;
    const double y = c - a - kd - md;
    double contrib;
    if (is_nonpositive_integer(y, integer_tolerance)) {
      const double n = -std::round(y);
      const int sign_n = std::fmod(n, 2.0) == 0.0 ? 1 : -1;
      contrib = sign_poch * sign_n * std::exp(log_a + lgamma_signed(n + 1.0).log_abs);
    } else {
      const SignedLog g = lgamma_signed(y);
      const double bracket = log_mz + digamma(kd + 1.0) + digamma(kd + md + 1.0) - digamma(a + kd + md) - digamma(y);
      contrib = sign_poch * g.sign * std::exp(log_a - g.log_abs) * bracket;
    }
    series += contrib;
    if (std::abs(contrib) <= 1e-17 * std::abs(series)) {
      if (++small_run >= 3) break;
    } else {
      small_run = 0;
    }
    const double next = a + md + kd;
    log_poch += std::log(std::abs(next));
    if (next < 0.0) sign_poch = -sign_poch;
  }
  if (m % 2 != 0) series = -series;  // (-1)^k x^{-k-m} = (-1)^m |x|^{-k-m}

  const SignedLog gc = lgamma_signed(c);
  const double prefactor = gc.sign * std::exp(gc.log_abs) * std::pow(-x, -a);
  return prefactor * (rgamma(a + md) * finite + rgamma(a) * series);
}

/// Branch-selecting evaluation for real x < 1.
inline Hyp2F1Eval hyp2f1(double a, double b, double c, double x) {
  require(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(x),
          "2F1 arguments must be finite");
  detail::check_c(c);
  a = detail::snap_nonpositive(a);
  b = detail::snap_nonpositive(b);
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    return {a, b, c, x, Hyp2F1Branch::terminating, hyp2f1_series(a, b, c, x)};
  }
  if (x >= 1.0) fail(ErrorCode::divergent_region, "2F1 not available for x >= 1");
  if (x >= -0.5) return {a, b, c, x, Hyp2F1Branch::series, hyp2f1_series(a, b, c, x)};
  if (x >= -1.0) {
    // Pfaff: F(a,b;c;x) = (1-x)^{-a} F(a, c-b; c; x/(x-1)), argument in [1/3, 1/2].
    const double v = std::pow(1.0 - x, -a) * hyp2f1_series(a, c - b, c, x / (x - 1.0));
    return {a, b, c, x, Hyp2F1Branch::series, v};
  }
  if (near_integer(a - b)) return {a, b, c, x, Hyp2F1Branch::logarithmic, hyp2f1_logarithmic(a, b, c, x)};
  if (near_integer(a - b, detail::bridge_half_width)) {
    // The connection terms cancel catastrophically here; interpolate in b
    // through the logarithmic value and two well-conditioned offsets.
    const double b0 = a - std::round(a - b);
    const double h = 2.0 * detail::bridge_half_width;
    const double f0 = hyp2f1(a, b0, c, x).value;
    const double fp = hyp2f1(a, b0 + h, c, x).value;
    const double fm = hyp2f1(a, b0 - h, c, x).value;
    const double t = (b - b0) / h;
    const double v = f0 + 0.5 * t * (fp - fm) + 0.5 * t * t * (fp - 2.0 * f0 + fm);
    return {a, b, c, x, Hyp2F1Branch::connection, v};
  }
  return {a, b, c, x, Hyp2F1Branch::connection, hyp2f1_connection(a, b, c, x)};
}

}  // namespace loewner::special
