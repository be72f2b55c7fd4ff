#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "loewner/diffusion.hpp"
#include "loewner/quadrature.hpp"
#include "loewner/stats.hpp"

namespace {

using loewner::DiffusionSpec;
using loewner::Kappa;

TEST(DriftT, Examples) {
  EXPECT_EQ(loewner::drift_T(0.0, Kappa(4.0)), 0.0);
  EXPECT_DOUBLE_EQ(loewner::drift_T(0.5, Kappa(4.0)), -1.0);
  EXPECT_DOUBLE_EQ(loewner::drift_T(-1.0, Kappa(1.0)), 2.0);
}

TEST(DriftT, OddAndBounded) {
  for (double k : {0.5, 1.0, 2.0, 8.0 / 3.0, 4.0, 6.0, 9.0}) {
    const Kappa kappa(k);
    const double bound = 2.0 / kappa.sqrt();
    EXPECT_NEAR(std::abs(loewner::drift_T(1.0 / kappa.sqrt(), kappa)), bound, 1e-14);
    for (int i = -400; i <= 400; ++i) {
      const double T = 0.05 * i;
      EXPECT_EQ(loewner::drift_T(-T, kappa), -loewner::drift_T(T, kappa));
      EXPECT_LE(std::abs(loewner::drift_T(T, kappa)), bound * (1.0 + 1e-14));
    }
  }
}

TEST(DriftT, TailConstant) {
  for (double k : {2.0, 4.0, 8.0, 10.0}) {
    const double x = 1e6;
    EXPECT_NEAR(-2.0 * loewner::drift_T(x, Kappa(k)) * x, 8.0 / k, 1e-6);
  }
}

TEST(SimulateT, ZeroNoiseSingleStep) {
  const auto p = loewner::simulate_T({.kappa = Kappa(4.0), .T0 = 1.0, .du = 0.1, .u_max = 0.1, .zero_noise = true});
  ASSERT_EQ(p.T_values.size(), 2u);
  EXPECT_DOUBLE_EQ(p.T_values[1], 0.92);
}

TEST(SimulateT, ZeroNoiseFixedPoint) {
  const auto p = loewner::simulate_T({.kappa = Kappa(2.0), .du = 0.01, .u_max = 5.0, .zero_noise = true});
  for (double v : p.T_values) EXPECT_EQ(v, 0.0);
}

TEST(SimulateT, DeterministicAndTerminalAgrees) {
  const DiffusionSpec spec{.kappa = Kappa(3.0), .du = 1e-3, .u_max = 2.0, .seed = 7, .path_index = 4};
  const auto a = loewner::simulate_T(spec);
  const auto b = loewner::simulate_T(spec);
  EXPECT_EQ(a.T_values, b.T_values);
  EXPECT_EQ(a.T_values.back(), loewner::simulate_T_terminal(spec));
}

TEST(SimulateT, RejectsBadSpec) {
  EXPECT_THROW((void)loewner::simulate_T({.du = 0.0}), loewner::Error);
  EXPECT_THROW((void)loewner::simulate_T({.du = 1e-3, .u_max = 1e-4}), loewner::Error);
}

// Property: the law of T_u from 0 is symmetric.
TEST(SimulateT, SymmetricLaw) {
  const std::size_t n = 2000;
  std::vector<double> plus(n), minus(n);
  for (std::size_t p = 0; p < n; ++p) {
    plus[p] = loewner::simulate_T_terminal({.kappa = Kappa(4.0), .du = 1e-2, .u_max = 2.0, .seed = 31, .path_index = p});
    minus[p] = -plus[p];
  }
  const double d = loewner::stats::ks_two_sample(loewner::stats::Sample(plus), loewner::stats::Sample(minus));
  EXPECT_LE(d, 1.95 * std::sqrt(2.0 / n));
}

TEST(ScaleAndSpeed, Examples) {
  EXPECT_EQ(loewner::scale_density(0.0, Kappa(3.0)), 1.0);
  EXPECT_DOUBLE_EQ(loewner::scale_density(1.0, Kappa(4.0)), 5.0);
  EXPECT_DOUBLE_EQ(loewner::scale_density(1.0, Kappa(2.0)), 9.0);
  EXPECT_EQ(loewner::speed_density(0.0, Kappa(3.0)), 1.0);
  EXPECT_DOUBLE_EQ(loewner::speed_density(1.0, Kappa(4.0)), 0.2);
}

TEST(ScaleAndSpeed, ProductIsOne) {
  for (double k : {1.0, 2.5, 4.0, 7.0, 11.0}) {
    for (int i = -50; i <= 50; ++i) {
      const double x = 0.3 * i;
      EXPECT_NEAR(loewner::scale_density(x, Kappa(k)) * loewner::speed_density(x, Kappa(k)), 1.0, 1e-13);
    }
  }
}

TEST(ScaleAndSpeed, IntegrabilityThreshold) {
  EXPECT_TRUE(loewner::speed_measure_finite(Kappa(7.9)));
  EXPECT_FALSE(loewner::speed_measure_finite(Kappa(8.0)));
  EXPECT_FALSE(loewner::speed_measure_finite(Kappa::ratio(8, 1)));
  EXPECT_FALSE(loewner::speed_measure_finite(Kappa(12.0)));
  // Mass on [0, L] keeps growing like log L at kappa = 8 and saturates below it.
  auto mass = [](double k, double L) {
    return loewner::integrate([&](double v) { return loewner::speed_density(std::exp(v), Kappa(k)) * std::exp(v); },
                              -30.0, std::log(L));
  };
  EXPECT_GT(mass(8.0, 1e8) - mass(8.0, 1e4), 0.9 * std::log(1e4) / std::sqrt(8.0));
  EXPECT_LT(mass(4.0, 1e8) - mass(4.0, 1e4), 1e-4);
}

TEST(ErgodicAverage, Examples) {
  const auto p = loewner::simulate_T({.kappa = Kappa(4.0), .du = 1e-2, .u_max = 3.0, .seed = 1});
  EXPECT_NEAR(loewner::ergodic_average(p, [](double) { return 1.0; }), 1.0, 1e-14);

  loewner::DiffusionPath ramp;
  for (int k = 0; k <= 100; ++k) {
    ramp.u_grid.push_back(0.01 * k);
    ramp.T_values.push_back(0.01 * k);
  }
  EXPECT_NEAR(loewner::ergodic_average(ramp, [](double t) { return t; }), 0.5, 1e-14);
}

}  // namespace
