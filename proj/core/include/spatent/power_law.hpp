// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>

namespace spatent {

/// y = amplitude * x^exponent fitted by ordinary least squares on
/// (log x, log y). rms_residual is measured in natural-log units.
struct PowerLawFit {
  double exponent = 0.0;
  double amplitude = 0.0;
  double rms_residual = 0.0;
};

/// Throws DomainError for fewer than 3 points, non-positive or non-finite
/// values, or all x equal.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

}  // namespace spatent
