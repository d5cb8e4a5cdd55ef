// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"

namespace spatent::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// symplectic-oracle, two-mode-squeezed, wick-monte-carlo,
/// mode-orthonormality and power-law-fit, in that order.
std::vector<CheckResult> run_selftest(const RunConfig& cfg);

}  // namespace spatent::cli
