// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spatent/error.hpp"
#include "spatent/field.hpp"
#include "spatent/power_law.hpp"
#include "spatent/spatial_modes.hpp"
#include "spatent/symplectic.hpp"

namespace spatent {

/// R = [c - s/2 - w, c - s/2], Q = [c + s/2, c + s/2 + w]; c defaults to
/// L/2. Throws InvalidInput if s < 0 or either region leaves the box.
std::pair<Region, Region> place_pair(double width, double separation,
                                     const ThermalFieldConfig& cfg,
                                     std::optional<double> center = {});

// ---------------------------------------------------------------------------
// Sweeps over separation and temperature
// ---------------------------------------------------------------------------

struct SweepSpec {
  DetectorProfile profile;
  double region_width = 0.1;
  std::vector<double> separations;
  std::vector<double> temperatures;
  int profile_order = 0;    ///< 0: default_profile_order
  int momentum_window = 0;  ///< > 0: state pre-selected to l <= window
  int l_min = 1;
  double convergence_tol = 1e-8;
  int hard_cap = kHardCap;
  std::optional<double> center;
  double residual_gate = kResidualGate;
  double tolerance = kVerdictTolerance;
  unsigned threads = 1;
};

/// Throws InvalidInput for empty grids or a grid point that leaves the box.
void validate(const SweepSpec& spec, const ThermalFieldConfig& cfg);

namespace point_flags {
inline constexpr unsigned kDivergent = 1u << 0;
inline constexpr unsigned kUnphysical = 1u << 1;
inline constexpr unsigned kResidual = 1u << 2;
inline constexpr unsigned kUnconverged = 1u << 3;
inline constexpr unsigned kError = 1u << 4;
inline constexpr unsigned kOrthogonalized = 1u << 5;
}  // namespace point_flags

/// "ok" or '|'-joined flag names.
std::string flags_to_string(unsigned flags);

struct SweepPoint {
  double separation = 0.0;
  double temperature = 0.0;
  CovarianceMatrix4 cm;
  bool has_cm = false;
  SeparabilityVerdict verdict;
  bool has_verdict = false;
  double purity = 0.0;            ///< NaN when det(gamma) < 1
  double purity_threshold = 0.0;  ///< +inf when unreachable
  double raw_residual = 0.0;
  double residual = 0.0;
  unsigned flags = 0;
  std::string error;
};

/// Points stored row-major: separation index first, then temperature.
struct SweepResult {
  std::vector<double> separations;
  std::vector<double> temperatures;
  std::vector<SweepPoint> points;

  std::size_t rows() const { return separations.size(); }
  std::size_t cols() const { return temperatures.size(); }
  const SweepPoint& at(std::size_t sep, std::size_t temp) const {
    return points[sep * cols() + temp];
  }
};

/// Every grid point ends up with a verdict or a flag; per-point failures
/// never abort the sweep.
SweepResult run_sweep(const SweepSpec& spec, const ThermalFieldConfig& cfg);

/// One point for arbitrary disjoint regions, computed exactly as run_sweep
/// would (the grid fields of spec are ignored). Throws InvalidPair for
/// overlapping regions.
SweepPoint evaluate_pair(const Region& r, const Region& q, double temperature,
                         const SweepSpec& spec, const ThermalFieldConfig& cfg);

// ---------------------------------------------------------------------------
// Momentum windows with a top-hat profile
// ---------------------------------------------------------------------------

struct WindowScanOptions {
  int l_min = 1;
  int window_cap = 2000;
  int profile_order = kHardCap;
  std::optional<double> center;
  double residual_gate = kResidualGate;
  double tolerance = kVerdictTolerance;
};

/// Two top-hat regions of equal width touching at the centre, with full
/// resolution mode vectors. The state is pre-selected to the lowest modes,
/// so each window m yields the covariance matrix of l in [l_min, m].
class WindowedPair {
 public:
  WindowedPair(double width, const ThermalFieldConfig& cfg,
               const WindowScanOptions& opts);

  /// Verdict for windows m = l_min..window_cap (index m - l_min).
  std::vector<Verdict> verdicts(double temperature) const;
  bool any_entangled(double temperature) const;

  const ModePair& pair() const { return pair_; }
  const WindowScanOptions& options() const { return opts_; }

 private:
  ThermalFieldConfig cfg_;
  WindowScanOptions opts_;
  ModePair pair_;
};

struct MomentumWindow {
  double region_width = 0.0;
  double temperature = 0.0;
  /// Delta k = l_max - l_min + 1 of the first entangled window.
  std::optional<int> min_modes;
  /// Last window of the first contiguous entangled run.
  std::optional<int> max_modes;
  bool open_window = false;  ///< entangled run reaches window_cap
  int entangled_windows = 0;
  double residual = 0.0;
  std::vector<Verdict> verdicts;
};

MomentumWindow momentum_window_scan(double width,
                                    const ThermalFieldConfig& cfg,
                                    double temperature,
                                    const WindowScanOptions& opts = {});

// ---------------------------------------------------------------------------
// Critical temperature
// ---------------------------------------------------------------------------

enum class TcRoute { gaussian_modulated, truncated_top_hat };

std::string_view to_string(TcRoute route);
TcRoute tc_route_from_string(std::string_view name);

enum class TcStatus { found, not_entangled, unbounded };

std::string_view to_string(TcStatus status);

struct CriticalTemperature {
  double value = 0.0;
  double lower = 0.0;  ///< last temperature seen entangled
  double upper = 0.0;  ///< first temperature seen separable
  TcStatus status = TcStatus::not_entangled;
  int evaluations = 0;
};

struct TcOptions {
  double relative_width = 1e-3;
  double initial_upper = 1.0;
  double ceiling = 1e6;
  /// Extra doublings past the bracket that must stay separable.
  int monotonicity_probes = 2;
  WindowScanOptions window;
  DetectorProfile gaussian_profile;
  int profile_order = 0;
  double residual_gate = kResidualGate;
  double tolerance = kVerdictTolerance;
  std::optional<double> center;
};

/// The entanglement indicator switched back on above the bracket.
class NonMonotoneIndicator : public Error {
 public:
  NonMonotoneIndicator(double lower, double upper, double revisited);
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double lower_;
  double upper_;
};

/// Bisection of a temperature indicator that is true below the critical
/// temperature. The bracket starts at [0, initial_upper] and doubles until the
/// indicator turns false or the ceiling is passed (status unbounded).
CriticalTemperature bisect_critical_temperature(
    const std::function<bool(double)>& entangled_at, const TcOptions& opts);

/// Regions of equal width touching at the centre. truncated_top_hat asks
/// whether any momentum window up to the cap is entangled.
CriticalTemperature critical_temperature(double width,
                                         const ThermalFieldConfig& cfg,
                                         TcRoute route,
                                         const TcOptions& opts = {});

struct CriticalTemperatureCurve {
  TcRoute route = TcRoute::truncated_top_hat;
  std::vector<double> widths;
  std::vector<CriticalTemperature> temperatures;
  /// Fit over the points with status found (needs >= 3).
  std::optional<PowerLawFit> fit;
};

CriticalTemperatureCurve critical_temperature_curve(
    std::span<const double> widths, const ThermalFieldConfig& cfg,
    TcRoute route, const TcOptions& opts = {}, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Purity route
// ---------------------------------------------------------------------------

/// Compares purity > purity_threshold with the PPT verdict of a physical CM.
struct PurityCrossCheck {
  double purity = 0.0;
  double threshold = 0.0;
  bool purity_says_entangled = false;
  bool ppt_says_entangled = false;
  double criterion_det = 0.0;
  double criterion_swapped = 0.0;

  bool agrees() const { return purity_says_entangled == ppt_says_entangled; }
};

PurityCrossCheck purity_cross_check(const CovarianceMatrix4& cm,
                                    double tol = kVerdictTolerance);

}  // namespace spatent
