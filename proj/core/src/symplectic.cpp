// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/symplectic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "spatent/error.hpp"

namespace spatent {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_finite(const CovarianceMatrix4& cm) {
  if (!cm.all_finite()) {
    throw InvalidInput("covariance matrix has non-finite entries");
  }
}

}  // namespace

CovarianceMatrix4 CovarianceMatrix4::two_mode_squeezed(double r) {
  const double ch = std::cosh(2.0 * r);
  const double sh = std::sinh(2.0 * r);
  return {ch, ch, ch, ch, sh, -sh};
}

std::array<std::array<double, 4>, 4> CovarianceMatrix4::assembled() const {
  return {{{a_uu, 0.0, c_uu, 0.0},
           {0.0, a_pp, 0.0, c_pp},
           {c_uu, 0.0, b_uu, 0.0},
           {0.0, c_pp, 0.0, b_pp}}};
}

bool CovarianceMatrix4::all_finite() const {
  return std::isfinite(a_uu) && std::isfinite(a_pp) && std::isfinite(b_uu) &&
         std::isfinite(b_pp) && std::isfinite(c_uu) && std::isfinite(c_pp);
}

SymplecticInvariants invariants(const CovarianceMatrix4& cm) {
  require_finite(cm);
  return {cm.a_uu * cm.a_pp, cm.b_uu * cm.b_pp, cm.c_uu * cm.c_pp,
          (cm.a_uu * cm.b_uu - cm.c_uu * cm.c_uu) *
              (cm.a_pp * cm.b_pp - cm.c_pp * cm.c_pp)};
}

SymplecticSpectrum symplectic_eigenvalues(const SymplecticInvariants& inv) {
  const double delta = inv.det_a + inv.det_b + 2.0 * inv.det_c;
  double disc = delta * delta - 4.0 * inv.det_gamma;
  if (disc < 0.0) {
    if (disc < -kDiscriminantClamp * std::max(1.0, delta * delta)) {
      throw MalformedCovariance(
          fmt::format("negative symplectic discriminant {:.6g}", disc));
    }
    disc = 0.0;
  }
  const double nu_plus_sq = 0.5 * (delta + std::sqrt(disc));
  // nu_+^2 nu_-^2 = det(gamma); dividing avoids cancellation for nu_-.
  double nu_minus_sq = 0.0;
  if (nu_plus_sq > 0.0) {
    nu_minus_sq = inv.det_gamma / nu_plus_sq;
  }
  // Rank-deficient blocks give det(gamma) = 0 up to rounding.
  if (nu_minus_sq < 0.0 &&
      nu_minus_sq >= -kDiscriminantClamp * std::max(1.0, nu_plus_sq)) {
    nu_minus_sq = 0.0;
  }
  if (nu_plus_sq < 0.0 || nu_minus_sq < 0.0) {
    throw MalformedCovariance(
        fmt::format("symplectic spectrum is not real (nu+^2={:.6g}, "
                    "nu-^2={:.6g})",
                    nu_plus_sq, nu_minus_sq));
  }
  return {std::sqrt(nu_plus_sq), std::sqrt(nu_minus_sq)};
}

SymplecticSpectrum eigen_oracle(const CovarianceMatrix4& cm) {
  require_finite(cm);
  Eigen::Matrix4d gamma;
  const auto g = cm.assembled();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) gamma(i, j) = g[i][j];
  }
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;

  // i*Omega*gamma has eigenvalues +-nu; Omega*gamma has +-i*nu.
  Eigen::EigenSolver<Eigen::Matrix4d> solver(omega * gamma, false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigen solver did not converge");
  }
  std::array<double, 4> moduli{};
  for (int i = 0; i < 4; ++i) moduli[i] = std::abs(solver.eigenvalues()[i]);
  std::sort(moduli.begin(), moduli.end());
  return {0.5 * (moduli[2] + moduli[3]), 0.5 * (moduli[0] + moduli[1])};
}

bool is_physical(const CovarianceMatrix4& cm, double tol) {
  if (!cm.all_finite()) return false;
  try {
    return symplectic_eigenvalues(invariants(cm)).nu_minus >= 1.0 - tol;
  } catch (const MalformedCovariance&) {
    return false;
  }
}

CovarianceMatrix4 partial_transpose(const CovarianceMatrix4& cm) {
  CovarianceMatrix4 out = cm;
  out.c_pp = -cm.c_pp;
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::physicality_violated:
      return "PhysicalityViolated";
    case Verdict::separable:
      return "Separable";
    case Verdict::entangled:
      return "Entangled";
  }
  return "?";
}

SeparabilityVerdict separability_test(const CovarianceMatrix4& cm,
                                      double tol) {
  SeparabilityVerdict out;
  out.nu_minus = symplectic_eigenvalues(invariants(cm)).nu_minus;
  if (out.nu_minus < 1.0 - tol) {
    out.verdict = Verdict::physicality_violated;
    out.nu_minus_pt = kNaN;
    out.criterion_det = kNaN;
    out.criterion_swapped = kNaN;
    out.log_negativity = 0.0;
    return out;
  }

  const double a = cm.a_uu, b = cm.a_pp, c = cm.b_uu, d = cm.b_pp;
  const double e = cm.c_uu, f = cm.c_pp;
  out.nu_minus_pt =
      symplectic_eigenvalues(invariants(partial_transpose(cm))).nu_minus;
  out.criterion_det =
      1.0 + (a * c - e * e) * (b * d - f * f) - a * b - c * d + 2.0 * e * f;
  out.criterion_swapped =
      1.0 + (a * c - f * f) * (b * d - e * e) - a * b - c * d + 2.0 * e * f;

  if (out.nu_minus_pt < 1.0 - tol) {
    out.verdict = Verdict::entangled;
    out.log_negativity = -std::log2(out.nu_minus_pt);
  } else {
    out.verdict = Verdict::separable;
    out.log_negativity = 0.0;
  }
  return out;
}

double purity(const CovarianceMatrix4& cm, double tol) {
  const double det = invariants(cm).det_gamma;
  if (det < 1.0 - tol) {
    throw UnphysicalState(
        fmt::format("det(gamma) = {:.6g} < 1: not a physical state", det));
  }
  return 1.0 / std::sqrt(det);
}

double purity_threshold(const CovarianceMatrix4& cm) {
  require_finite(cm);
  const double radicand = cm.a_uu * cm.a_pp + cm.b_uu * cm.b_pp -
                          2.0 * cm.c_uu * cm.c_pp - 1.0;
  if (!(radicand > 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(radicand);
}

}  // namespace spatent
