// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "spatent/analysis.hpp"
#include "spatent/symplectic.hpp"

namespace spatent {

/// Short position-momentum pulse H(t) = Gamma(t)(u_R P_A + u_Q P_B) acting on
/// two probes initially in their ground states.
struct ProbeCoupling {
  double gamma_eff = 0.01;  ///< integral of Gamma(t) over the pulse
  double probe_mass = 1.0;
  double probe_frequency = 1000.0;
  double hbar = 1.0;

  /// Gamma^2 hbar m omega / 2: weight of the single-excitation block.
  double kappa() const {
    return gamma_eff * gamma_eff * hbar * probe_mass * probe_frequency / 2.0;
  }
};

/// Throws InvalidInput unless 0 < gamma_eff < 0.1 and m, omega, hbar > 0.
void validate(const ProbeCoupling& coupling);

/// Unnormalised probe density matrix in the basis |00>, |01>, |10>, |11>:
///
///   | 1 0 0 0 |
///   | 0 x y 0 |
///   | 0 y z 0 |
///   | 0 0 0 d |
struct ProbePairState {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double delta = 0.0;
  bool entangled = false;
  /// |y| - threshold(delta); positive iff entangled.
  double condition_margin = 0.0;
};

/// Builds a state and evaluates the extraction condition. Throws
/// InvalidInput for negative x, z, delta or y^2 > xz.
ProbePairState make_probe_state(double x, double y, double z, double delta);

/// <u_R^2 u_Q^2> of the zero-mean Gaussian state, from the second moments
/// <u_R^2> = A/2, <u_Q^2> = C/2, <u_R u_Q> = E/2.
double gaussian_fourth_moment(const CovarianceMatrix4& cm);

/// x, y, z = kappa <u_R^2>, kappa <u_R u_Q>, kappa <u_Q^2>;
/// delta = Gamma^4 <u_R^2 u_Q^2>. Throws UnphysicalState for unphysical CMs.
ProbePairState probe_state(const CovarianceMatrix4& cm,
                           const ProbeCoupling& coupling);

/// 1/2 sqrt(delta (delta + 1)).
double extraction_threshold(double delta);

/// |y| > extraction_threshold(delta), strictly.
bool extraction_test(const ProbePairState& state);

/// Smallest eigenvalue of the partially transposed 4x4 probe matrix;
/// negative iff the probes are entangled. Throws NumericalError if the
/// eigensolver fails.
double ppt_probe_oracle(const ProbePairState& state);

/// The two tests differ for extraction_threshold(delta) < |y| <= sqrt(delta);
/// true when |y| lies in that band widened by `relative`.
bool in_threshold_band(const ProbePairState& state, double relative = 1e-6);

struct ExtractionPoint {
  double separation = 0.0;
  double temperature = 0.0;
  bool has_state = false;
  ProbePairState state;
  double threshold = 0.0;
  double oracle_min_eigenvalue = 0.0;
  bool in_band = false;
  double log_negativity = 0.0;
  double cross_position = 0.0;  ///< E of the field CM
  unsigned flags = 0;
  std::string error;
};

/// Probe states for every physical point of a sweep, in sweep order.
std::vector<ExtractionPoint> extraction_scan(const SweepResult& sweep,
                                             const ProbeCoupling& coupling);

}  // namespace spatent
