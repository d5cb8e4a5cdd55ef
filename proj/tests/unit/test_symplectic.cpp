// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <spatent/error.hpp>
#include <spatent/symplectic.hpp>

#include "oracles.hpp"

namespace spatent {
namespace {

CovarianceMatrix4 diag_cm(double a, double c) { return {a, a, c, c, 0, 0}; }

TEST(Invariants, Identity) {
  const auto inv = invariants(CovarianceMatrix4::identity());
  EXPECT_EQ(inv.det_a, 1.0);
  EXPECT_EQ(inv.det_b, 1.0);
  EXPECT_EQ(inv.det_c, 0.0);
  EXPECT_EQ(inv.det_gamma, 1.0);
}

TEST(Invariants, ProductThermal) {
  const auto inv = invariants(diag_cm(2, 2));
  EXPECT_EQ(inv.det_a, 4.0);
  EXPECT_EQ(inv.det_b, 4.0);
  EXPECT_EQ(inv.det_c, 0.0);
  EXPECT_EQ(inv.det_gamma, 16.0);
}

TEST(Invariants, TwoModeSqueezedMatchesDenseDeterminant) {
  const double ch = std::cosh(2.0), sh = std::sinh(2.0);
  const CovarianceMatrix4 cm{ch, ch, ch, ch, sh, -sh};
  const auto inv = invariants(cm);
  EXPECT_NEAR(inv.det_a, ch * ch, 1e-12);
  EXPECT_NEAR(inv.det_b, ch * ch, 1e-12);
  EXPECT_NEAR(inv.det_c, -sh * sh, 1e-12);
  EXPECT_NEAR(inv.det_gamma, oracle::dense(cm).determinant(), 1e-9);
  EXPECT_NEAR(inv.det_gamma, 1.0, 1e-9);
}

TEST(SymplecticEigenvalues, IdentityAndThermal) {
  auto s = symplectic_eigenvalues(CovarianceMatrix4::identity());
  EXPECT_DOUBLE_EQ(s.nu_plus, 1.0);
  EXPECT_DOUBLE_EQ(s.nu_minus, 1.0);
  s = symplectic_eigenvalues(diag_cm(3.5, 3.5));
  EXPECT_NEAR(s.nu_plus, 3.5, 1e-12);
  EXPECT_NEAR(s.nu_minus, 3.5, 1e-12);
}

TEST(SymplecticEigenvalues, PureSqueezedState) {
  const auto cm = CovarianceMatrix4::two_mode_squeezed(1.0);
  const auto s = symplectic_eigenvalues(cm);
  const auto ref = oracle::williamson(oracle::dense(cm));
  EXPECT_NEAR(s.nu_plus, 1.0, 1e-9);
  EXPECT_NEAR(s.nu_minus, 1.0, 1e-9);
  EXPECT_NEAR(ref.first, 1.0, 1e-9);
  EXPECT_NEAR(ref.second, 1.0, 1e-9);
}

TEST(SymplecticEigenvalues, RejectsComplexSpectrum) {
  // Delta^2 < 4 det: no real symplectic spectrum.
  const SymplecticInvariants bad{1.0, 1.0, 0.0, 5.0};
  EXPECT_THROW(symplectic_eigenvalues(bad), MalformedCovariance);
}

TEST(EigenOracle, BlockDiagonal) {
  const CovarianceMatrix4 cm{2, 2, 3, 3, 0, 0};
  const auto s = eigen_oracle(cm);
  EXPECT_NEAR(s.nu_plus, 3.0, 1e-12);
  EXPECT_NEAR(s.nu_minus, 2.0, 1e-12);
  const auto id = eigen_oracle(CovarianceMatrix4::identity());
  EXPECT_NEAR(id.nu_plus, 1.0, 1e-12);
  EXPECT_NEAR(id.nu_minus, 1.0, 1e-12);
}

TEST(IsPhysical, Examples) {
  EXPECT_TRUE(is_physical(CovarianceMatrix4::identity()));
  EXPECT_FALSE(is_physical(diag_cm(0.5, 0.5)));
  EXPECT_TRUE(is_physical(CovarianceMatrix4::two_mode_squeezed(0.7)));
  CovarianceMatrix4 nan_cm;
  nan_cm.c_uu = std::nan("");
  EXPECT_FALSE(is_physical(nan_cm));
}

TEST(PartialTranspose, FlipsMomentumCorrelation) {
  const CovarianceMatrix4 cm{2, 2, 2, 2, 0.3, 0.2};
  const auto pt = partial_transpose(cm);
  EXPECT_EQ(pt.c_uu, 0.3);
  EXPECT_EQ(pt.c_pp, -0.2);
  const CovarianceMatrix4 f0{2, 2, 2, 2, 0.3, 0.0};
  EXPECT_EQ(partial_transpose(f0), f0);
}

TEST(PartialTranspose, SqueezedSpectrum) {
  const auto cm = partial_transpose(CovarianceMatrix4::two_mode_squeezed(1.0));
  EXPECT_NEAR(symplectic_eigenvalues(cm).nu_minus, std::exp(-2.0), 1e-12);
  EXPECT_NEAR(oracle::williamson(oracle::dense(cm)).second, std::exp(-2.0),
              1e-12);
}

TEST(SeparabilityTest, Examples) {
  auto v = separability_test(CovarianceMatrix4::identity());
  EXPECT_EQ(v.verdict, Verdict::separable);
  EXPECT_EQ(v.log_negativity, 0.0);

  v = separability_test(CovarianceMatrix4::two_mode_squeezed(1.0));
  EXPECT_EQ(v.verdict, Verdict::entangled);
  EXPECT_NEAR(v.log_negativity, 2.0 / std::numbers::ln2, 1e-9);

  v = separability_test(diag_cm(5, 5));
  EXPECT_EQ(v.verdict, Verdict::separable);

  v = separability_test(diag_cm(0.5, 0.5));
  EXPECT_EQ(v.verdict, Verdict::physicality_violated);
  EXPECT_FALSE(v.valid());
  EXPECT_TRUE(std::isnan(v.nu_minus_pt));
}

TEST(SeparabilityTest, SqueezedClosedForms) {
  for (double r : {0.25, 0.5, 1.0}) {
    const auto cm = CovarianceMatrix4::two_mode_squeezed(r);
    const auto v = separability_test(cm);
    EXPECT_NEAR(v.nu_minus_pt, std::exp(-2.0 * r), 1e-9);
    EXPECT_NEAR(v.log_negativity, 2.0 * r / std::numbers::ln2, 1e-9);
    EXPECT_NEAR(v.log_negativity, oracle::log_negativity(cm), 1e-9);
  }
}

TEST(SeparabilityTest, ToleranceBoundary) {
  // nu_-^{T_A} = 1 - 1e-12 sits inside the tolerance: separable.
  const double nu = 1.0 - 1e-12;
  const double r = -0.5 * std::log(nu);
  const auto v = separability_test(CovarianceMatrix4::two_mode_squeezed(r));
  EXPECT_EQ(v.verdict, Verdict::separable);
}

TEST(Purity, Examples) {
  EXPECT_DOUBLE_EQ(purity(CovarianceMatrix4::identity()), 1.0);
  EXPECT_DOUBLE_EQ(purity(diag_cm(2, 2)), 0.25);
  for (double r : {0.1, 0.8, 1.5}) {
    EXPECT_NEAR(purity(CovarianceMatrix4::two_mode_squeezed(r)), 1.0, 1e-9);
  }
  EXPECT_THROW(purity(diag_cm(0.5, 0.5)), UnphysicalState);
}

TEST(PurityThreshold, Examples) {
  EXPECT_DOUBLE_EQ(purity_threshold(CovarianceMatrix4::identity()), 1.0);
  const double ch = std::cosh(2.0), sh = std::sinh(2.0);
  EXPECT_NEAR(
      purity_threshold(CovarianceMatrix4::two_mode_squeezed(1.0)),
      1.0 / std::sqrt(2 * ch * ch + 2 * sh * sh - 1), 1e-12);
  EXPECT_LT(purity_threshold(CovarianceMatrix4::two_mode_squeezed(1.0)), 0.19);
  EXPECT_NEAR(purity_threshold(diag_cm(2, 2)), 1.0 / std::sqrt(7.0), 1e-15);
  // Radicand <= 0 means no purity can exceed the bound.
  EXPECT_TRUE(std::isinf(purity_threshold(diag_cm(0.5, 0.5))));
}

TEST(Criteria, DeterminantFormTracksPptVerdict) {
  for (double r : {0.1, 0.6}) {
    const auto v = separability_test(CovarianceMatrix4::two_mode_squeezed(r));
    EXPECT_LT(v.criterion_det, 0.0);
  }
  EXPECT_GT(separability_test(diag_cm(2, 2)).criterion_det, 0.0);
}

}  // namespace
}  // namespace spatent
