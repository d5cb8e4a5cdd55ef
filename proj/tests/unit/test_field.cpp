// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <spatent/error.hpp>
#include <spatent/field.hpp>

#include "oracles.hpp"

namespace spatent {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(FieldConfig, DefaultUnitsGiveSquaredIndexEnergies) {
  const ThermalFieldConfig cfg;
  for (int l : {1, 2, 7, 100}) {
    EXPECT_NEAR(cfg.level_energy(l), kPi * kPi * l * l,
                1e-12 * l * l);
  }
}

TEST(FieldConfig, Validation) {
  ThermalFieldConfig cfg;
  EXPECT_NO_THROW(validate(cfg));
  cfg.chemical_potential = kPi * kPi;
  EXPECT_THROW(validate(cfg), InvalidInput);
  cfg.chemical_potential = 0.0;
  cfg.box_length = 0.0;
  EXPECT_THROW(validate(cfg), InvalidInput);
  cfg.box_length = 1.0;
  cfg.temperature = -1.0;
  EXPECT_THROW(validate(cfg), InvalidInput);
  cfg.temperature = std::nan("");
  EXPECT_THROW(validate(cfg), InvalidInput);
}

TEST(ModeFunction, Values) {
  const ThermalFieldConfig cfg;
  EXPECT_NEAR(mode_function(field_mode(1, cfg), 0.5), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(mode_function(field_mode(2, cfg), 0.5), 0.0, 1e-15);
  EXPECT_THROW(mode_function(field_mode(1, cfg), 1.5), DomainError);
  EXPECT_THROW(field_mode(0, cfg), InvalidInput);
}

TEST(ModeFunction, OrthonormalByQuadrature) {
  ThermalFieldConfig cfg;
  cfg.box_length = 2.5;
  for (int l = 1; l <= 10; ++l) {
    for (int m = 1; m <= 10; ++m) {
      const auto ml = field_mode(l, cfg), mm = field_mode(m, cfg);
      const double v =
          boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
              [&](double x) {
                return mode_function(ml, x) * mode_function(mm, x);
              },
              0.0, cfg.box_length, 20, 1e-14);
      EXPECT_NEAR(v, l == m ? 1.0 : 0.0, 1e-10) << l << "," << m;
    }
  }
}

TEST(ThermalFactor, GroundStateIsOne) {
  const ThermalFieldConfig cfg;
  for (int l : {1, 5, 1000}) {
    EXPECT_EQ(thermal_factor(field_mode(l, cfg), cfg), 1.0);
  }
}

TEST(ThermalFactor, ClosedFormCoth) {
  // (E_1 - mu)/(2T) = ln 3 gives coth(ln 3) = 5/4.
  ThermalFieldConfig cfg;
  cfg.temperature = kPi * kPi / (2.0 * std::log(3.0));
  EXPECT_NEAR(thermal_factor(field_mode(1, cfg), cfg), 1.25, 1e-14);
}

TEST(ThermalFactor, HighTemperatureAsymptote) {
  ThermalFieldConfig cfg;
  cfg.chemical_potential = -3.0;
  for (int l : {1, 2, 3}) {
    const auto mode = field_mode(l, cfg);
    const double gap = mode.energy - cfg.chemical_potential;
    cfg.temperature = gap / (2.0 * 0.04);  // argument 0.04
    const double f = thermal_factor(mode, cfg);
    EXPECT_NEAR(f / (2.0 * cfg.temperature / gap), 1.0, 0.01);
  }
}

TEST(ThermalFactor, MonotoneInTemperature) {
  ThermalFieldConfig cfg;
  const auto mode = field_mode(3, cfg);
  double prev = thermal_factor(mode, cfg);
  for (double t : {0.5, 1.0, 10.0, 100.0, 1e4}) {
    cfg.temperature = t;
    const double f = thermal_factor(mode, cfg);
    EXPECT_GE(f, 1.0);
    EXPECT_GE(f, prev);
    prev = f;
  }
  // coth saturates at 1 for cold modes but must grow once excited.
  EXPECT_GT(prev, 1.0);
}

TEST(Weights, UnitIndependent) {
  EXPECT_NEAR(position_weight(3), 1.0 / (9 * kPi * kPi), 1e-16);
  EXPECT_NEAR(momentum_weight(3), 9 * kPi * kPi, 1e-12);
  EXPECT_NEAR(position_weight(5) * momentum_weight(5), 1.0, 1e-15);
}

}  // namespace
}  // namespace spatent
