// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace spatent {

/// Bookkeeping for one mode sum.
struct SeriesStatus {
  double partial_sum = 0.0;
  double absolute_sum = 0.0;   ///< sum of |terms|, used as the scale
  double tail_estimate = 0.0;  ///< |sum of the last tenth of the terms|
  int terms = 0;
  bool converged = true;
  bool divergent = false;
};

/// Convergence analysis of a truncated infinite series, terms in ascending l.
///
/// converged: tail_estimate <= tol * absolute_sum.
/// divergent: not converged and the partial sums oscillate over the last
/// decade of l at least half as much as over the decade before (a Cauchy
/// test that needs >= 100 terms).
SeriesStatus analyze_series(std::span<const double> terms, double tol);

/// A sum with finitely many populated modes: exact, always converged.
SeriesStatus exact_series(std::span<const double> terms);

}  // namespace spatent
