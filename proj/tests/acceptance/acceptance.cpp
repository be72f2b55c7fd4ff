// Acceptance suite. One line per criterion; exit status is nonzero if any
// gated criterion fails. Criterion 11 is reported but never gates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "loewner/loewner.hpp"

namespace {

using loewner::Kappa;
using loewner::StationaryLaw;
namespace sp = loewner::special;
namespace st = loewner::stats;

constexpr double pi = std::numbers::pi;
constexpr std::uint64_t master_seed = 20240917;

// Pinned tolerances.
constexpr double c2_y_error_factor = 5.0;   // max |y - sqrt(1 + 4t)| <= 5 dt
constexpr double c2_u_tol = 1e-4;
constexpr double c3_residual_tol = 1e-6;
constexpr double c3_slope_tol = 1e-3;
constexpr double c3_log_ratio_min = 2.0;
constexpr double c4_ks_max = 0.02;
constexpr double c5_ks_max = 0.05;
constexpr double c6_ks_max = 0.03;
constexpr double c7_abs_max = 0.02;
constexpr double c9_agree_tol = 1e-9;
constexpr double c9_exact_ulps = 4.0;
constexpr double c10_ks_max = 0.05;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

bool machine_exact(double v, double ref) {
  return std::abs(v - ref) <= c9_exact_ulps * std::numeric_limits<double>::epsilon() * std::abs(ref);
}

// 1. Flow invariants over 1000 paths for kappa in {2, 4, 6}.
Outcome flow_invariants() {
  const double dt = 1e-3, horizon = 10.0;
  const std::size_t paths = 1000;
  std::vector<std::size_t> violations(paths * 3, 0);
  const double kappas[] = {2.0, 4.0, 6.0};
  loewner::parallel_for(paths * 3, [&](std::size_t job) {
    const Kappa kappa(kappas[job / paths]);
    const auto path = loewner::simulate_flow(kappa, horizon, dt, master_seed + 1, {.path_index = job % paths});
    const auto map = loewner::u_tilde(path);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < path.states.size(); ++k) {
      const auto& s = path.states[k];
      const double u = map.u_values[k];
      if (k > 0 && !(s.y > path.states[k - 1].y)) ++bad;
      if (s.y * s.y > 1.0 + 4.0 * s.t) ++bad;
      if (u < 0.25 * std::log1p(4.0 * s.t) || u > s.t) ++bad;
    }
    violations[job] = bad;
  });
  std::size_t total = 0;
  for (auto v : violations) total += v;
  return {total == 0, fmt("%zu violations over 3 x %zu paths", total, paths)};
}

// 2. Zero-noise oracle.
Outcome zero_noise_oracle() {
  const double dt = 1e-3;
  const auto path = loewner::simulate_flow(Kappa(4.0), 10.0, dt, 0, {.zero_noise = true});
  double err = 0.0;
  for (const auto& s : path.states) err = std::max(err, std::abs(s.y - std::sqrt(1.0 + 4.0 * s.t)));
  const auto fine = loewner::simulate_flow(Kappa(4.0), 2.0, 1e-4, 0, {.zero_noise = true});
  const double u_err = std::abs(loewner::u_tilde(fine).max_u() - 0.25 * std::log(9.0));
  const bool ok = err <= c2_y_error_factor * dt && u_err <= c2_u_tol;
  return {ok, fmt("max|y - sqrt(1+4t)| = %.3g (tol %.3g); |u(2) - ln(9)/4| = %.3g (tol %.0e)", err,
                  c2_y_error_factor * dt, u_err, c2_u_tol)};
}

// 3. Stationarity residual and growth of the first solution.
Outcome kfe_stationarity() {
  double worst = 0.0;
  for (const Kappa& k : {Kappa(2.0), Kappa::ratio(8, 3), Kappa(4.0), Kappa(6.0)}) {
    const double c = StationaryLaw(k).normalization();
    for (int i = 0; i <= 400; ++i) {
      worst = std::max(worst, std::abs(loewner::kfe_residual(k, -10.0 + 0.05 * i, 0.0, 0.5 * c)));
    }
  }
  const double T = 1e3;
  double slope_err = 0.0;
  for (double kv : {2.0, 4.0}) {
    const double g = loewner::general_solution(T, Kappa(kv), 1.0, 0.0);
    slope_err = std::max(slope_err, std::abs(g / T - 1.0 / (1.0 + 8.0 / kv)));
  }
  const double log_ratio = std::abs(loewner::general_solution(T, Kappa::ratio(8, 3), 1.0, 0.0) / T);
  const bool ok = worst <= c3_residual_tol && slope_err <= c3_slope_tol && log_ratio >= c3_log_ratio_min;
  return {ok, fmt("max|residual| = %.3g (tol %.0e); slope error k=2,4 = %.3g (tol %.0e); |g/T| at k=8/3 = %.4f (need >= %.1f)",
                  worst, c3_residual_tol, slope_err, c3_slope_tol, log_ratio, c3_log_ratio_min)};
}

// 4. Direct SDE at u = 20 against the stationary law.
Outcome stationary_convergence() {
  const Kappa kappa(4.0);
  const std::size_t paths = 10000;
  std::vector<double> finals(paths);
  loewner::parallel_for(paths, [&](std::size_t p) {
    finals[p] = loewner::simulate_T_terminal({.kappa = kappa, .du = 1e-3, .u_max = 20.0, .seed = master_seed + 4, .path_index = p});
  });
  const StationaryLaw law(kappa);
  const double d = st::ks_one_sample(st::Sample(finals), [&](double t) { return law.cdf(t); });
  return {d <= c4_ks_max, fmt("KS(T_20, stationary) = %.4f (tol %.2f)", d, c4_ks_max)};
}

double clock_cot(const Kappa& kappa, double level, double relative_step, std::uint64_t seed, std::size_t p) {
  const auto path = loewner::simulate_flow_scaled(kappa, relative_step, {.clock = level}, seed, {.path_index = p});
  const auto map = loewner::u_tilde(path);
  return loewner::cot_arg(loewner::state_at_clock(path, map, level));
}

// 5. Flow-extracted T_10 against direct T_10.
Outcome pipeline_equivalence() {
  const Kappa kappa(4.0);
  const std::size_t paths = 2000;
  std::vector<double> extracted(paths), direct(paths);
  loewner::parallel_for(paths, [&](std::size_t p) {
    extracted[p] = clock_cot(kappa, 10.0, 1e-4, master_seed + 51, p) / kappa.sqrt();
    direct[p] = loewner::simulate_T_terminal({.kappa = kappa, .du = 1e-3, .u_max = 10.0, .seed = master_seed + 52, .path_index = p});
  });
  const double d = st::ks_two_sample(st::Sample(extracted), st::Sample(direct));
  return {d <= c5_ks_max, fmt("two-sample KS = %.4f (tol %.2f)", d, c5_ks_max)};
}

// 6. Argument at the hitting time of a_50 against uniform(0, pi).
Outcome embedding_uniformity() {
  const Kappa kappa(4.0);
  const std::size_t paths = 10000;
  const double level = loewner::schedule_a(kappa, 50);
  std::vector<double> theta(paths);
  loewner::parallel_for(paths, [&](std::size_t p) {
    theta[p] = pi / 2 - std::atan(clock_cot(kappa, level, 1e-3, master_seed + 6, p));
  });
  const double d = st::ks_one_sample(st::Sample(theta), [](double th) { return std::clamp(th / pi, 0.0, 1.0); });
  return {d <= c6_ks_max, fmt("a_50 = %.4f; KS(theta, U(0,pi)) = %.4f (tol %.2f)", level, d, c6_ks_max)};
}

// 7. Time average of 1{|T| <= 1} along one path to u = 10^4.
Outcome ergodic_average() {
  const auto path = loewner::simulate_T({.kappa = Kappa(4.0), .du = 1e-3, .u_max = 1e4, .seed = master_seed + 7});
  const double z = loewner::ergodic_average(path, [](double t) { return std::abs(t) <= 1.0 ? 1.0 : 0.0; });
  const double mu = 2.0 / pi * std::atan(2.0);
  return {std::abs(z - mu) <= c7_abs_max, fmt("Z_u = %.4f, target %.4f, |diff| = %.4f (tol %.2f)", z, mu, std::abs(z - mu), c7_abs_max)};
}

// 8. Normalizability across kappa = 8.
Outcome phase_transition() {
  const std::vector<Kappa> grid{Kappa(7.0), Kappa(7.5), Kappa(7.9), Kappa(8.0), Kappa(8.5), Kappa(10.0)};
  const auto rows = loewner::phase_scan(grid);
  bool ok = true;
  for (int i = 0; i < 3; ++i) ok = ok && rows[i].normalizable && rows[i].inverse_normalization && std::isfinite(*rows[i].inverse_normalization);
  ok = ok && *rows[0].inverse_normalization < *rows[1].inverse_normalization &&
       *rows[1].inverse_normalization < *rows[2].inverse_normalization;
  for (int i = 3; i < 6; ++i) ok = ok && !rows[i].normalizable && rows[i].exponent <= 1.0;
  return {ok, fmt("1/C at 7, 7.5, 7.9 = %.4f, %.4f, %.4f; 8, 8.5, 10 flagged = %d%d%d", *rows[0].inverse_normalization,
                  *rows[1].inverse_normalization, *rows[2].inverse_normalization, !rows[3].normalizable,
                  !rows[4].normalizable, !rows[5].normalizable)};
}

// 9. Hypergeometric engine.
Outcome hypergeometric() {
  bool at_zero = true;
  for (double a : {-2.0, 0.5, 1.7})
    for (double b : {-1.5, 0.3, 2.0})
      for (double c : {0.5, 1.5, 3.2}) at_zero = at_zero && sp::hyp2f1(a, b, c, 0.0).value == 1.0;
  double agree = 0.0;
  for (double kv : {3.0, 5.0, 6.0}) {
    const double b = -Kappa(kv).four_over();
    agree = std::max(agree, std::abs(sp::hyp2f1_series(0.5, b, 1.5, -0.5) - sp::hyp2f1_connection(0.5, b, 1.5, -0.5)));
  }
  bool exact = machine_exact(sp::hyp2f1(0.5, -2.0, 1.5, -2.0).value, 47.0 / 15.0);
  for (double x : {-100.0, -7.5, -1.0, -0.25, 0.0}) exact = exact && machine_exact(sp::hyp2f1(0.5, -1.0, 1.5, x).value, 1.0 - x / 3.0);
  const bool ok = at_zero && agree <= c9_agree_tol && exact;
  return {ok, fmt("F(x=0)=1 exact: %s; series vs connection at -0.5: %.3g (tol %.0e); terminating identities exact: %s",
                  at_zero ? "yes" : "no", agree, c9_agree_tol, exact ? "yes" : "no")};
}

// 10. Brownian scaling: x/y at t = 4 from i against x/y at t = 1 from i/2.
Outcome scaling_law() {
  const Kappa kappa(4.0);
  const std::size_t paths = 5000;
  const double dt = 1e-3;
  std::vector<double> big(paths), small(paths);
  loewner::parallel_for(paths, [&](std::size_t p) {
    big[p] = loewner::cot_arg(loewner::simulate_flow(kappa, 4.0, dt, master_seed + 101, {.path_index = p}).states.back());
    small[p] = loewner::cot_arg(
        loewner::simulate_flow(kappa, 1.0, dt, master_seed + 102, {.y0 = 0.5, .path_index = p}).states.back());
  });
  const double d = st::ks_two_sample(st::Sample(big), st::Sample(small));
  return {d <= c10_ks_max, fmt("two-sample KS = %.4f (tol %.2f)", d, c10_ks_max)};
}

// 11. Report only: law of cot(arg z_S) / sqrt(kappa) against the stationary law.
Outcome conjecture_report() {
  std::string detail;
  bool nonincreasing = true;
  for (double kv : {2.0, 4.0}) {
    const Kappa kappa(kv);
    const StationaryLaw law(kappa);
    const std::size_t paths = 2000;
    const std::vector<double> S{10.0, 100.0, 1000.0};
    std::vector<std::vector<double>> T(S.size(), std::vector<double>(paths));
    loewner::parallel_for(paths, [&](std::size_t p) {
      const auto path = loewner::simulate_flow_scaled(kappa, 1e-3, {.horizon = S.back()}, master_seed + 11, {.path_index = p});
      for (std::size_t i = 0; i < S.size(); ++i) T[i][p] = loewner::cot_arg(loewner::state_at(path, S[i])) / kappa.sqrt();
    });
    double last = 1.0;
    detail += fmt("kappa=%g:", kv);
    for (std::size_t i = 0; i < S.size(); ++i) {
      const double d = st::ks_one_sample(st::Sample(T[i]), [&](double t) { return law.cdf(t); });
      nonincreasing = nonincreasing && d <= last;
      last = d;
      detail += fmt(" S=%g KS=%.4f", S[i], d);
    }
    detail += "; ";
  }
  detail += nonincreasing ? "nonincreasing in S" : "not monotone in S";
  return {true, detail};
}

struct Criterion {
  int id;
  const char* name;
  bool gated;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "flow invariants", true, flow_invariants},
      {2, "zero-noise oracle", true, zero_noise_oracle},
      {3, "stationary forward equation", true, kfe_stationarity},
      {4, "stationary convergence of the diffusion", true, stationary_convergence},
      {5, "pipeline equivalence", true, pipeline_equivalence},
      {6, "embedding uniformity", true, embedding_uniformity},
      {7, "ergodic average", true, ergodic_average},
      {8, "phase transition", true, phase_transition},
      {9, "hypergeometric engine", true, hypergeometric},
      {10, "scaling law", true, scaling_law},
      {11, "large-time argument law", false, conjecture_report},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = !c.gated ? "REPORT" : (o.pass ? "PASS" : "FAIL");
    if (c.gated && !o.pass) ++failures;
    std::printf("[%s] %2d %s: %s [%.1fs]\n", tag, c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d gated criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
