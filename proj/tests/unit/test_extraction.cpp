// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include <spatent/error.hpp>
#include <spatent/extraction.hpp>
#include <spatent/sampling.hpp>

#include "generators.hpp"
#include "oracles.hpp"

namespace spatent {
namespace {

ProbeCoupling coupling_with_kappa(double kappa) {
  ProbeCoupling c;
  c.gamma_eff = 0.01;
  c.probe_mass = 1.0;
  c.hbar = 1.0;
  c.probe_frequency = 2.0 * kappa / (c.gamma_eff * c.gamma_eff);
  return c;
}

TEST(ProbeCoupling, Validation) {
  ProbeCoupling c;
  EXPECT_NO_THROW(validate(c));
  c.gamma_eff = 0.1;
  EXPECT_THROW(validate(c), InvalidInput);
  c.gamma_eff = 0.0;
  EXPECT_THROW(validate(c), InvalidInput);
  c.gamma_eff = 0.01;
  c.probe_frequency = -1.0;
  EXPECT_THROW(validate(c), InvalidInput);
}

TEST(ProbeState, UncorrelatedRegions) {
  const CovarianceMatrix4 cm{2.0, 2.0, 3.0, 3.0, 0.0, 0.0};
  const auto c = coupling_with_kappa(0.5);
  const auto s = probe_state(cm, c);
  EXPECT_EQ(s.y, 0.0);
  EXPECT_FALSE(s.entangled);
  const double g4 = std::pow(c.gamma_eff, 4);
  EXPECT_NEAR(s.delta, g4 * (2.0 / 2) * (3.0 / 2), 1e-22);
}

TEST(ProbeState, VacuumMoments) {
  const auto s =
      probe_state(CovarianceMatrix4::identity(), coupling_with_kappa(0.01));
  EXPECT_NEAR(s.x, 0.005, 1e-15);
  EXPECT_NEAR(s.z, 0.005, 1e-15);
  EXPECT_EQ(s.y, 0.0);
  EXPECT_NEAR(s.delta, 1e-8 * 0.25, 1e-24);
}

TEST(ProbeState, RejectsUnphysical) {
  EXPECT_THROW(probe_state({0.5, 0.5, 0.5, 0.5, 0, 0}, ProbeCoupling{}),
               UnphysicalState);
}

TEST(ProbeState, LinearInKappa) {
  const auto cm = CovarianceMatrix4::two_mode_squeezed(0.4);
  const auto a = probe_state(cm, coupling_with_kappa(1.0));
  const auto b = probe_state(cm, coupling_with_kappa(3.0));
  EXPECT_NEAR(b.x, 3.0 * a.x, 1e-14);
  EXPECT_NEAR(b.y, 3.0 * a.y, 1e-14);
  EXPECT_NEAR(b.z, 3.0 * a.z, 1e-14);
  EXPECT_EQ(a.entangled, b.entangled);
}

TEST(FourthMoment, WickMatchesMonteCarlo) {
  gen::Rng rng(5);
  for (int i = 0; i < 3; ++i) {
    const auto s = random_physical_cm(rng.engine(), {4.0, 0.6});
    const double exact = gaussian_fourth_moment(s.cm);
    const auto [mean, se] = oracle::sampled_fourth_moment(s.cm, 1000000, 17 + i);
    EXPECT_LE(std::abs(mean - exact), 3.0 * se) << i;
    const auto est = sample_fourth_moment(s.cm, 1000000, 99 + i);
    EXPECT_LE(std::abs(est.mean - exact), 3.0 * est.standard_error) << i;
  }
}

TEST(ExtractionTest, Examples) {
  EXPECT_FALSE(extraction_test(make_probe_state(1e-4, 0.0, 1e-4, 1e-8)));
  const auto s = make_probe_state(0.02, 0.01, 0.02, 1e-8);
  EXPECT_NEAR(extraction_threshold(1e-8), 5.0e-5, 1e-9);
  EXPECT_TRUE(extraction_test(s));
  EXPECT_GT(s.condition_margin, 0.0);

  const double d = 1e-6;
  const double at = extraction_threshold(d);
  EXPECT_FALSE(extraction_test(make_probe_state(1.0, at, 1.0, d)));
}

TEST(ExtractionTest, InvalidState) {
  EXPECT_THROW(make_probe_state(-1.0, 0.0, 1.0, 0.0), InvalidInput);
  EXPECT_THROW(make_probe_state(1e-4, 1e-3, 1e-4, 0.0), InvalidInput);
}

TEST(PptOracle, Examples) {
  EXPECT_GE(ppt_probe_oracle(make_probe_state(0.1, 0.0, 0.2, 1e-3)), 0.0);
  const auto s = make_probe_state(0.02, 0.01, 0.02, 1e-8);
  EXPECT_LT(ppt_probe_oracle(s), 0.0);
  EXPECT_NEAR(ppt_probe_oracle(s),
              oracle::probe_min_eigenvalue(s.x, s.y, s.z, s.delta), 1e-15);
}

TEST(PptOracle, AgreesOutsideBand) {
  gen::Rng rng(23);
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    const auto s = gen::probe_state(rng);
    const double m = ppt_probe_oracle(s);
    EXPECT_NEAR(m, oracle::probe_min_eigenvalue(s.x, s.y, s.z, s.delta),
                1e-14);
    if (in_threshold_band(s)) continue;
    ++compared;
    EXPECT_EQ(m < 0.0, extraction_test(s)) << s.x << " " << s.y << " " << s.delta;
  }
  EXPECT_GT(compared, 50);
}

TEST(PptOracle, BandIsWhereTheTestsDiffer) {
  const double d = 1e-4;
  // threshold ~ 0.005, sqrt(d) = 0.01.
  const auto inside = make_probe_state(1.0, 0.007, 1.0, d);
  EXPECT_TRUE(in_threshold_band(inside));
  EXPECT_TRUE(extraction_test(inside));
  EXPECT_GE(ppt_probe_oracle(inside), 0.0);
  EXPECT_FALSE(in_threshold_band(make_probe_state(1.0, 0.02, 1.0, d)));
}

TEST(ExtractionScan, SkipsPointsWithoutState) {
  SweepResult sweep;
  sweep.separations = {0.0};
  sweep.temperatures = {1.0, 2.0};
  SweepPoint good;
  good.has_cm = good.has_verdict = true;
  good.cm = CovarianceMatrix4::two_mode_squeezed(0.3);
  good.verdict = separability_test(good.cm);
  SweepPoint bad;
  bad.error = "diverged";
  sweep.points = {good, bad};
  const auto out = extraction_scan(sweep, ProbeCoupling{});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(out[0].has_state);
  EXPECT_TRUE(out[0].state.entangled);
  EXPECT_FALSE(out[1].has_state);
  EXPECT_EQ(out[1].error, "diverged");
}

}  // namespace
}  // namespace spatent
