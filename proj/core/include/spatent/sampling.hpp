// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "spatent/symplectic.hpp"

namespace spatent {

/// A covariance matrix built as S diag(n1, n1, n2, n2) S^T with a random
/// symplectic S = M (+) M^-T that keeps positions and momenta uncoupled, so
/// the exact symplectic spectrum is known.
struct SampledCovariance {
  CovarianceMatrix4 cm;
  double nu_plus = 1.0;
  double nu_minus = 1.0;
};

struct RandomCmOptions {
  double max_thermal = 10.0;  ///< n drawn uniformly from [1, max_thermal]
  double max_squeeze = 1.0;   ///< log singular values of M in +-max_squeeze
};

SampledCovariance random_physical_cm(std::mt19937_64& rng,
                                     const RandomCmOptions& opts = {});

struct MomentEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t samples = 0;
};

/// Monte-Carlo estimate of <u_R^2 u_Q^2> by direct sampling of the Gaussian
/// with <u_R^2> = A/2, <u_Q^2> = C/2, <u_R u_Q> = E/2.
MomentEstimate sample_fourth_moment(const CovarianceMatrix4& cm,
                                    std::size_t samples, std::uint64_t seed);

}  // namespace spatent
