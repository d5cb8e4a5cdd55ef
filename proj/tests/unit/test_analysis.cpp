// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include <spatent/analysis.hpp>
#include <spatent/error.hpp>

namespace spatent {
namespace {

SweepSpec fig2_spec(std::vector<double> seps, std::vector<double> temps) {
  SweepSpec s;
  s.region_width = 0.1;
  s.separations = std::move(seps);
  s.temperatures = std::move(temps);
  return s;
}

TEST(PlacePair, SymmetricAboutCentre) {
  const ThermalFieldConfig cfg;
  const auto [r, q] = place_pair(0.1, 0.2, cfg);
  EXPECT_DOUBLE_EQ(r.left, 0.3);
  EXPECT_DOUBLE_EQ(r.right, 0.4);
  EXPECT_DOUBLE_EQ(q.left, 0.6);
  EXPECT_NEAR(q.right, 0.7, 1e-15);
  EXPECT_THROW(place_pair(0.1, -0.01, cfg), InvalidInput);
  EXPECT_THROW(place_pair(0.3, 0.5, cfg), InvalidInput);
  EXPECT_NO_THROW(place_pair(0.1, 0.8, cfg));  // touches both walls
}

TEST(RunSweep, SmallSeparationLowTemperatureEntangled) {
  const ThermalFieldConfig cfg;
  const auto res = run_sweep(fig2_spec({0.0, 0.05}, {0.01}), cfg);
  for (const auto& p : res.points) {
    ASSERT_TRUE(p.has_verdict) << p.error;
    EXPECT_EQ(p.verdict.verdict, Verdict::entangled);
    EXPECT_GT(p.verdict.log_negativity, 0.0);
  }
}

TEST(RunSweep, LargestSeparationSeparable) {
  const ThermalFieldConfig cfg;
  const auto res = run_sweep(fig2_spec({0.8}, {0.01, 1.0}), cfg);
  for (const auto& p : res.points) {
    ASSERT_TRUE(p.has_verdict);
    EXPECT_EQ(p.verdict.verdict, Verdict::separable);
  }
}

TEST(RunSweep, LogNegativityNonIncreasingInTemperature) {
  const ThermalFieldConfig cfg;
  std::vector<double> temps;
  for (int j = 0; j < 25; ++j) temps.push_back(std::pow(10.0, -2 + 5.0 * j / 24));
  const auto res = run_sweep(fig2_spec({0.0, 0.1, 0.2}, temps), cfg);
  for (std::size_t i = 0; i < res.rows(); ++i) {
    for (std::size_t j = 1; j < res.cols(); ++j) {
      EXPECT_LE(res.at(i, j).verdict.log_negativity,
                res.at(i, j - 1).verdict.log_negativity + 1e-12);
    }
  }
}

TEST(RunSweep, EveryPointHasVerdictOrFlag) {
  const ThermalFieldConfig cfg;
  SweepSpec s = fig2_spec({0.0, 0.3}, {0.0, 10.0});
  s.profile.kind = ProfileKind::top_hat;
  const auto res = run_sweep(s, cfg);
  for (const auto& p : res.points) {
    EXPECT_TRUE(p.has_verdict || p.flags != 0);
    EXPECT_TRUE(p.flags & point_flags::kDivergent);
    EXPECT_FALSE(p.error.empty());
  }
}

TEST(RunSweep, ThreadCountDoesNotChangeResults) {
  const ThermalFieldConfig cfg;
  SweepSpec s = fig2_spec({0.0, 0.1, 0.2, 0.3, 0.4}, {0.01, 1.0, 100.0});
  const auto one = run_sweep(s, cfg);
  s.threads = 4;
  const auto four = run_sweep(s, cfg);
  ASSERT_EQ(one.points.size(), four.points.size());
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    EXPECT_EQ(one.points[i].cm, four.points[i].cm);
    EXPECT_EQ(one.points[i].verdict.log_negativity,
              four.points[i].verdict.log_negativity);
  }
}

TEST(RunSweep, MatchesSinglePointEvaluation) {
  const ThermalFieldConfig cfg;
  const SweepSpec s = fig2_spec({0.07}, {0.5});
  const auto res = run_sweep(s, cfg);
  const auto [r, q] = place_pair(0.1, 0.07, cfg);
  const auto pt = evaluate_pair(r, q, 0.5, s, cfg);
  EXPECT_EQ(pt.cm, res.points[0].cm);
  EXPECT_EQ(pt.verdict.nu_minus_pt, res.points[0].verdict.nu_minus_pt);
  EXPECT_THROW(evaluate_pair({0.1, 0.3}, {0.2, 0.4}, 0.5, s, cfg), InvalidPair);
}

TEST(RunSweep, Validation) {
  const ThermalFieldConfig cfg;
  EXPECT_THROW(run_sweep(fig2_spec({}, {1.0}), cfg), InvalidInput);
  EXPECT_THROW(run_sweep(fig2_spec({0.1}, {-1.0}), cfg), InvalidInput);
  EXPECT_THROW(run_sweep(fig2_spec({0.95}, {1.0}), cfg), InvalidInput);
}

TEST(MomentumWindow, ShrinksWithRegionSize) {
  const ThermalFieldConfig cfg;
  const auto big = momentum_window_scan(0.25, cfg, 1.0);
  const auto small = momentum_window_scan(0.1, cfg, 1.0);
  ASSERT_TRUE(big.min_modes && small.min_modes);
  EXPECT_LT(*big.min_modes, *small.min_modes);
  EXPECT_EQ(*big.min_modes, 4);
  EXPECT_GE(*small.max_modes, *small.min_modes);
  EXPECT_LE(std::abs(small.residual), kResidualGate);
}

TEST(MomentumWindow, ProductOrderOne) {
  const ThermalFieldConfig cfg;
  for (int n : {4, 6, 8, 12, 16}) {
    const auto w = momentum_window_scan(1.0 / n, cfg, 1.0);
    ASSERT_TRUE(w.min_modes);
    const double product = *w.min_modes / static_cast<double>(n);
    EXPECT_GT(product, 0.3);
    EXPECT_LT(product, 3.0);
  }
}

TEST(MomentumWindow, EntangledWindowsPassPhysicality) {
  const ThermalFieldConfig cfg;
  const WindowedPair pair(0.125, cfg, {});
  const auto cms = assemble_cm_windows(pair.pair().r, pair.pair().q,
                                       cfg.at_temperature(1.0), 1, 200);
  const auto verdicts = pair.verdicts(1.0);
  for (std::size_t m = 0; m < verdicts.size() && m < cms.size(); ++m) {
    if (verdicts[m] == Verdict::entangled) {
      EXPECT_GE(symplectic_eigenvalues(cms[m]).nu_minus, 1.0 - kVerdictTolerance);
    }
  }
}

TEST(Bisection, SyntheticIndicator) {
  TcOptions opts;
  int calls = 0;
  const auto tc = bisect_critical_temperature(
      [&](double t) {
        ++calls;
        return t < 3.7;
      },
      opts);
  EXPECT_EQ(tc.status, TcStatus::found);
  EXPECT_NEAR(tc.value, 3.7, 3.7e-3);
  EXPECT_LT(tc.lower, 3.7);
  EXPECT_GE(tc.upper, 3.7);
  EXPECT_LE(tc.upper - tc.lower, opts.relative_width * tc.upper);
  EXPECT_EQ(tc.evaluations, calls);
}

TEST(Bisection, NeverEntangled) {
  const auto tc = bisect_critical_temperature([](double) { return false; }, {});
  EXPECT_EQ(tc.status, TcStatus::not_entangled);
}

TEST(Bisection, Unbounded) {
  const auto tc = bisect_critical_temperature([](double) { return true; }, {});
  EXPECT_EQ(tc.status, TcStatus::unbounded);
  // Doubling stops at the last step below the ceiling.
  EXPECT_GE(tc.lower, 0.5 * TcOptions{}.ceiling);
}

TEST(Bisection, NonMonotoneIndicatorDetected) {
  // Separable in (4, 8] but entangled again around 16.
  auto f = [](double t) { return t < 4.0 || (t > 12.0 && t < 20.0); };
  EXPECT_THROW(bisect_critical_temperature(f, {}), NonMonotoneIndicator);
}

TEST(CriticalTemperature, BracketContract) {
  const ThermalFieldConfig cfg;
  const auto tc = critical_temperature(0.25, cfg, TcRoute::truncated_top_hat);
  ASSERT_EQ(tc.status, TcStatus::found);
  const WindowedPair pair(0.25, cfg, {});
  EXPECT_TRUE(pair.any_entangled(tc.lower));
  EXPECT_FALSE(pair.any_entangled(tc.upper));
  EXPECT_TRUE(pair.any_entangled(0.99 * tc.value));
  EXPECT_FALSE(pair.any_entangled(1.01 * tc.value));
}

TEST(CriticalTemperature, DecreasesWithWidth) {
  const ThermalFieldConfig cfg;
  const std::vector<double> widths{0.0625, 0.125, 0.25, 0.5};
  const auto curve =
      critical_temperature_curve(widths, cfg, TcRoute::truncated_top_hat);
  for (std::size_t i = 1; i < widths.size(); ++i) {
    EXPECT_LT(curve.temperatures[i].value, curve.temperatures[i - 1].value);
  }
  ASSERT_TRUE(curve.fit);
  EXPECT_LT(curve.fit->exponent, 0.0);
}

TEST(CriticalTemperature, GaussianRouteRuns) {
  const ThermalFieldConfig cfg;
  const auto tc = critical_temperature(0.1, cfg, TcRoute::gaussian_modulated);
  EXPECT_EQ(tc.status, TcStatus::found);
  EXPECT_GT(tc.value, 0.0);
}

TEST(TcRoute, Names) {
  EXPECT_EQ(tc_route_from_string("tophat-window"), TcRoute::truncated_top_hat);
  EXPECT_EQ(tc_route_from_string("gaussian"), TcRoute::gaussian_modulated);
  EXPECT_THROW(tc_route_from_string("nope"), InvalidInput);
}

TEST(PurityCrossCheck, AgreesOnClosedForms) {
  const auto sq = purity_cross_check(CovarianceMatrix4::two_mode_squeezed(1.0));
  EXPECT_TRUE(sq.purity_says_entangled);
  EXPECT_TRUE(sq.agrees());
  const auto th = purity_cross_check({2, 2, 2, 2, 0, 0});
  EXPECT_FALSE(th.purity_says_entangled);
  EXPECT_TRUE(th.agrees());
  EXPECT_THROW(purity_cross_check({0.5, 0.5, 0.5, 0.5, 0, 0}), UnphysicalState);
}

}  // namespace
}  // namespace spatent
