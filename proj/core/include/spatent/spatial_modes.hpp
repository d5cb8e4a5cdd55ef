// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spatent/error.hpp"
#include "spatent/field.hpp"
#include "spatent/series.hpp"
#include "spatent/symplectic.hpp"

namespace spatent {

/// Default bound on the number of field modes in any sum.
inline constexpr int kHardCap = 100000;

/// Default gate on |sum_l I_l^R I_l^Q| for verdict-bearing pairs.
inline constexpr double kResidualGate = 1e-6;

/// Interval [left, right] inside the box.
struct Region {
  double left = 0.0;
  double right = 0.0;

  double width() const { return right - left; }
  bool overlaps(const Region& other) const {
    return left < other.right && other.left < right;
  }
};

/// Throws InvalidInput unless 0 <= left < right <= L.
Region make_region(double left, double right, const ThermalFieldConfig& cfg);

enum class ProfileKind { top_hat, gaussian_modulated };

std::string_view to_string(ProfileKind kind);
ProfileKind profile_kind_from_string(std::string_view name);

/// Weighting of the field inside a region.
///
/// top_hat: I_l = integral over the region of phi_l.
/// gaussian_modulated: I_l = (cos k_l x1 - cos k_l x2) exp(-k_l^2 w^2),
/// optionally with the extra 1/k_l of the top hat.
struct DetectorProfile {
  ProfileKind kind = ProfileKind::gaussian_modulated;
  double modulation_width = 0.0;  ///< w; 0 means "width of the region"
  bool inverse_wavenumber = false;
};

/// Range of field modes entering a mode vector or a covariance sum.
struct TruncationSpec {
  int l_min = 1;
  int l_max = 0;
  double convergence_tol = 1e-8;
  int hard_cap = kHardCap;
  /// The state only populates l in [l_min, l_max]: sums are exact rather
  /// than truncations of an infinite series.
  bool preselected = false;
};

/// Throws InvalidInput unless 1 <= l_min <= l_max <= hard_cap.
void validate(const TruncationSpec& trunc);

/// Number of modes a profile needs on a region when no explicit order is
/// given: the hard cap for the top hat, enough to resolve the Gaussian
/// cutoff otherwise.
int default_profile_order(const DetectorProfile& profile, const Region& region,
                          const ThermalFieldConfig& cfg,
                          int hard_cap = kHardCap);

/// Normalised overlap coefficients of one region's profile with the box
/// modes. coefficients[l - 1] holds I_l for l = 1..l_max; entries below
/// l_min are zero.
struct ModeVector {
  Region region;
  DetectorProfile profile;
  int l_min = 1;
  int l_max = 0;
  std::vector<double> coefficients;
  double normalization_constant = 1.0;
  bool orthogonalized = false;

  double coefficient(int l) const {
    return (l >= 1 && l <= l_max) ? coefficients[l - 1] : 0.0;
  }
  double squared_norm() const;
};

/// Unnormalised overlaps. For the top hat these are the integrals of phi_l
/// over the region with unit weight.
std::vector<double> raw_overlaps(const Region& region,
                                 const DetectorProfile& profile,
                                 const TruncationSpec& trunc,
                                 const ThermalFieldConfig& cfg);

/// Throws DegenerateMode if every raw overlap vanishes.
ModeVector overlap_coefficients(const Region& region,
                                const DetectorProfile& profile,
                                const TruncationSpec& trunc,
                                const ThermalFieldConfig& cfg);

/// sum_l I_l^R I_l^Q, i.e. [u_R, p_Q] / (i hbar).
/// Throws InvalidPair when the truncations differ.
double cross_commutator_residual(const ModeVector& r, const ModeVector& q);

/// Symmetric (Loewdin) orthogonalisation of the pair followed by
/// renormalisation. Throws CannotOrthogonalize for (anti)parallel vectors.
std::pair<ModeVector, ModeVector> orthogonalize_pair(const ModeVector& r,
                                                     const ModeVector& q);

/// Entry order used by CmAssemblyReport::series.
enum class CmEntry { a, b, c, d, e, f };
inline constexpr std::array<std::string_view, 6> kCmEntryNames = {
    "A", "B", "C", "D", "E", "F"};

struct CmAssemblyReport {
  CovarianceMatrix4 cm;
  std::array<SeriesStatus, 6> series{};
  double cross_commutator_residual = 0.0;
  double residual_gate = kResidualGate;
  int l_min = 1;
  int l_max = 0;
  bool preselected = false;

  const SeriesStatus& entry(CmEntry e) const {
    return series[static_cast<int>(e)];
  }
  bool all_converged() const;
  /// A momentum entry (B, D, F) failed to converge.
  bool momentum_divergent() const;
  bool usable_for_verdict() const;
  /// Human-readable reason the report is unusable, empty if usable.
  std::string diagnostic() const;
};

/// Covariance matrix of the two spatial modes:
///   A = sum (k_l L)^-2 (I_l^R)^2 coth_l,  B = sum (k_l L)^2 (I_l^R)^2 coth_l
///   C, D likewise with I^Q,  E, F with I^R I^Q.
/// Summation is serial in ascending l. Throws InvalidPair for mismatched
/// vectors or a window beyond the stored coefficients.
CmAssemblyReport assemble_cm(const ModeVector& r, const ModeVector& q,
                             const ThermalFieldConfig& cfg,
                             const TruncationSpec& trunc,
                             double residual_gate = kResidualGate);

/// Covariance matrices of the pre-selected states l in [l_min, m] for every
/// m = l_min..l_cap (element m - l_min). Bit-identical to assemble_cm with
/// the corresponding preselected window.
std::vector<CovarianceMatrix4> assemble_cm_windows(
    const ModeVector& r, const ModeVector& q, const ThermalFieldConfig& cfg,
    int l_min, int l_cap);

/// Raised when a verdict is requested from a report whose momentum sums
/// diverge.
class DivergenceError : public Error {
 public:
  explicit DivergenceError(CmAssemblyReport report);
  const CmAssemblyReport& report() const { return report_; }

 private:
  CmAssemblyReport report_;
};

/// separability_test on a usable report. Throws DivergenceError if a
/// momentum sum diverges, InvalidPair if the residual exceeds the gate,
/// NumericalError for other unconverged sums.
SeparabilityVerdict verdict_for(const CmAssemblyReport& report,
                                double tol = kVerdictTolerance);

/// Mode vectors for two disjoint regions, orthogonalised when the raw
/// cross residual exceeds the gate.
struct ModePair {
  ModeVector r;
  ModeVector q;
  double raw_residual = 0.0;
  double residual = 0.0;
  bool orthogonalized = false;
};

/// Throws InvalidPair for overlapping regions.
ModePair prepare_mode_pair(const Region& r, const Region& q,
                           const DetectorProfile& profile,
                           const TruncationSpec& profile_trunc,
                           const ThermalFieldConfig& cfg,
                           double residual_gate = kResidualGate);

}  // namespace spatent
