// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string_view>

namespace spatent {

/// Tolerance applied to every comparison of a symplectic eigenvalue with 1.
/// States within this distance of the boundary are reported separable.
inline constexpr double kVerdictTolerance = 1e-9;

/// Relative size of a negative discriminant that is still treated as
/// rounding noise and clamped to zero.
inline constexpr double kDiscriminantClamp = 1e-10;

/// Covariance matrix of two modes R and Q with no position-momentum
/// correlations:
///
///   | A 0 E 0 |
///   | 0 B 0 F |      ordering (u_R, p_R, u_Q, p_Q)
///   | E 0 C 0 |
///   | 0 F 0 D |
///
/// Entries are dimensionless; the vacuum is the identity.
struct CovarianceMatrix4 {
  double a_uu = 1.0;  ///< A
  double a_pp = 1.0;  ///< B
  double b_uu = 1.0;  ///< C
  double b_pp = 1.0;  ///< D
  double c_uu = 0.0;  ///< E
  double c_pp = 0.0;  ///< F

  static CovarianceMatrix4 identity() { return {}; }

  /// Two-mode squeezed vacuum with squeezing parameter r.
  static CovarianceMatrix4 two_mode_squeezed(double r);

  /// Full symmetric 4x4 matrix, row-major, in (u_R, p_R, u_Q, p_Q) order.
  std::array<std::array<double, 4>, 4> assembled() const;

  bool all_finite() const;

  friend bool operator==(const CovarianceMatrix4&,
                         const CovarianceMatrix4&) = default;
};

/// det A, det B, det C and det(gamma) of the 2x2 block decomposition.
struct SymplecticInvariants {
  double det_a = 0.0;
  double det_b = 0.0;
  double det_c = 0.0;
  double det_gamma = 0.0;
};

struct SymplecticSpectrum {
  double nu_plus = 0.0;
  double nu_minus = 0.0;
};

/// Throws InvalidInput on non-finite entries.
SymplecticInvariants invariants(const CovarianceMatrix4& cm);

/// Closed-form symplectic eigenvalues from the invariants, using
/// Delta = det_a + det_b + 2 det_c so no standard-form reduction is needed.
/// Throws MalformedCovariance if the discriminant is negative beyond
/// kDiscriminantClamp (relative to Delta^2).
SymplecticSpectrum symplectic_eigenvalues(const SymplecticInvariants& inv);

inline SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix4& cm) {
  return symplectic_eigenvalues(invariants(cm));
}

/// Independent route: moduli of the eigenvalues of i*Omega*gamma from a
/// general eigensolver. Throws NumericalError if the solver fails.
SymplecticSpectrum eigen_oracle(const CovarianceMatrix4& cm);

/// gamma + i Omega >= 0, checked as nu_minus >= 1 - tol.
bool is_physical(const CovarianceMatrix4& cm, double tol = kVerdictTolerance);

/// Time reversal of mode Q: F -> -F.
CovarianceMatrix4 partial_transpose(const CovarianceMatrix4& cm);

enum class Verdict { physicality_violated, separable, entangled };

std::string_view to_string(Verdict v);

/// Outcome of the PPT test. When the verdict is physicality_violated only
/// nu_minus is meaningful; the remaining real fields are NaN and
/// log_negativity is zero.
struct SeparabilityVerdict {
  Verdict verdict = Verdict::separable;
  double nu_minus = 0.0;
  double nu_minus_pt = 0.0;
  /// 1 + det(gamma) - AB - CD + 2EF; negative iff nu_minus_pt < 1.
  double criterion_det = 0.0;
  /// The same expression with the commonly printed determinant factors
  /// (AC - F^2)(BD - E^2). Kept for comparison only.
  double criterion_swapped = 0.0;
  double log_negativity = 0.0;

  bool valid() const { return verdict != Verdict::physicality_violated; }
};

SeparabilityVerdict separability_test(const CovarianceMatrix4& cm,
                                      double tol = kVerdictTolerance);

/// Tr(rho^2) = 1/sqrt(det gamma). Throws UnphysicalState if
/// det gamma < 1 - tol.
double purity(const CovarianceMatrix4& cm, double tol = kVerdictTolerance);

/// Purity above which the state is entangled: 1/sqrt(AB + CD - 2EF - 1).
/// Returns +infinity when the radicand is not positive.
double purity_threshold(const CovarianceMatrix4& cm);

}  // namespace spatent
