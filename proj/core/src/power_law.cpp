// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/power_law.hpp"

#include <cmath>
#include <fmt/format.h>
#include <vector>

#include "spatent/error.hpp"

namespace spatent {

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) {
    throw DomainError(
        fmt::format("power-law fit needs >= 3 points, got {}", points.size()));
  }
  const auto n = static_cast<double>(points.size());
  std::vector<double> lx, ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (!(std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0)) {
      throw DomainError(
          fmt::format("power-law fit needs positive data, got ({}, {})", x, y));
    }
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
  }

  // Centre before forming the normal equations.
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("power-law fit needs distinct x values");

  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  fit.amplitude = std::exp(intercept);
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - (intercept + fit.exponent * lx[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace spatent
