// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace spatent {

namespace {

SeriesStatus accumulate(std::span<const double> terms) {
  SeriesStatus s;
  s.terms = static_cast<int>(terms.size());
  for (double t : terms) {
    s.partial_sum += t;
    s.absolute_sum += std::abs(t);
  }
  return s;
}

}  // namespace

SeriesStatus exact_series(std::span<const double> terms) {
  return accumulate(terms);
}

SeriesStatus analyze_series(std::span<const double> terms, double tol) {
  SeriesStatus s = accumulate(terms);
  const std::size_t n = terms.size();
  if (n == 0) return s;

  const std::size_t block = std::max<std::size_t>(1, n / 10);
  double tail = 0.0;
  for (std::size_t i = n - block; i < n; ++i) tail += terms[i];
  s.tail_estimate = std::abs(tail);
  s.converged = s.tail_estimate <= tol * s.absolute_sum;

  if (s.converged || n < 100) return s;

  std::vector<double> partial(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) partial[i + 1] = partial[i] + terms[i];
  auto oscillation = [&](std::size_t lo, std::size_t hi) {
    double osc = 0.0;
    for (std::size_t m = lo + 1; m <= hi; ++m) {
      osc = std::max(osc, std::abs(partial[m] - partial[hi]));
    }
    return osc;
  };
  const double last = oscillation(n / 10, n);
  const double previous = oscillation(n / 100, n / 10);
  s.divergent = last > tol * s.absolute_sum && last >= 0.5 * previous;
  return s;
}

}  // namespace spatent
