// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/spatial_modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <fmt/format.h>
#include <numbers>

namespace spatent {

namespace {

// cos(a) - cos(b) without cancellation for nearby arguments.
// sin(s), with values at the rounding level of s treated as an exact node.
double resolved_sine(double s) {
  const double v = std::sin(s);
  return std::abs(v) <= 4.0 * std::numeric_limits<double>::epsilon() *
                            std::abs(s)
             ? 0.0
             : v;
}

double cosine_difference(double a, double b) {
  return 2.0 * resolved_sine(0.5 * (a + b)) * resolved_sine(0.5 * (b - a));
}

struct ModeTerms {
  double a, b, c, d, e, f;
};

ModeTerms mode_terms(int l, double ir, double iq, double coth) {
  const double pw = position_weight(l);
  const double mw = momentum_weight(l);
  return {pw * (ir * ir) * coth, mw * (ir * ir) * coth,
          pw * (iq * iq) * coth, mw * (iq * iq) * coth,
          pw * (ir * iq) * coth, mw * (ir * iq) * coth};
}

void require_compatible(const ModeVector& r, const ModeVector& q) {
  if (r.l_min != q.l_min || r.l_max != q.l_max ||
      r.coefficients.size() != q.coefficients.size()) {
    throw InvalidPair(fmt::format(
        "mode vectors use different truncations ([{}, {}] vs [{}, {}])",
        r.l_min, r.l_max, q.l_min, q.l_max));
  }
}

double dot(const ModeVector& r, const ModeVector& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
    s += r.coefficients[i] * q.coefficients[i];
  }
  return s;
}

void normalize(ModeVector& mv) {
  const double n = std::sqrt(mv.squared_norm());
  for (double& c : mv.coefficients) c /= n;
}

}  // namespace

Region make_region(double left, double right, const ThermalFieldConfig& cfg) {
  if (!(std::isfinite(left) && std::isfinite(right))) {
    throw InvalidInput("region bounds must be finite");
  }
  if (!(left >= 0.0 && right <= cfg.box_length && left < right)) {
    throw InvalidInput(fmt::format(
        "region [{}, {}] must satisfy 0 <= x1 < x2 <= L = {}", left, right,
        cfg.box_length));
  }
  return {left, right};
}

std::string_view to_string(ProfileKind kind) {
  return kind == ProfileKind::top_hat ? "tophat" : "gaussian";
}

ProfileKind profile_kind_from_string(std::string_view name) {
  if (name == "tophat" || name == "top_hat" || name == "top-hat") {
    return ProfileKind::top_hat;
  }
  if (name == "gaussian" || name == "gaussian_modulated") {
    return ProfileKind::gaussian_modulated;
  }
  throw InvalidInput(fmt::format("unknown profile '{}'", name));
}

void validate(const TruncationSpec& trunc) {
  if (trunc.hard_cap < 1) throw InvalidInput("hard_cap must be >= 1");
  if (trunc.l_min < 1 || trunc.l_min > trunc.l_max ||
      trunc.l_max > trunc.hard_cap) {
    throw InvalidInput(fmt::format(
        "truncation needs 1 <= l_min <= l_max <= hard_cap (got {}, {}, {})",
        trunc.l_min, trunc.l_max, trunc.hard_cap));
  }
  if (!(trunc.convergence_tol > 0.0)) {
    throw InvalidInput("convergence_tol must be > 0");
  }
}

int default_profile_order(const DetectorProfile& profile, const Region& region,
                          const ThermalFieldConfig& cfg, int hard_cap) {
  if (profile.kind == ProfileKind::top_hat) return hard_cap;
  const double w = profile.modulation_width > 0.0 ? profile.modulation_width
                                                   : region.width();
  // exp(-k^2 w^2) < exp(-144) beyond this order.
  const double order = std::ceil(12.0 * cfg.box_length / (std::numbers::pi * w));
  return static_cast<int>(std::clamp(order, 64.0, double(hard_cap)));
}

double ModeVector::squared_norm() const {
  double s = 0.0;
  for (double c : coefficients) s += c * c;
  return s;
}

std::vector<double> raw_overlaps(const Region& region,
                                 const DetectorProfile& profile,
                                 const TruncationSpec& trunc,
                                 const ThermalFieldConfig& cfg) {
  validate(trunc);
  if (profile.kind == ProfileKind::gaussian_modulated &&
      profile.modulation_width < 0.0) {
    throw InvalidInput("modulation width must be > 0");
  }
  const double w = profile.modulation_width > 0.0 ? profile.modulation_width
                                                   : region.width();
  const double amplitude = std::sqrt(2.0 / cfg.box_length);

  std::vector<double> raw(trunc.l_max, 0.0);
  for (int l = trunc.l_min; l <= trunc.l_max; ++l) {
    const double k = std::numbers::pi * l / cfg.box_length;
    const double diff = cosine_difference(k * region.left, k * region.right);
    double v = 0.0;
    if (profile.kind == ProfileKind::top_hat) {
      v = amplitude * diff / k;
    } else {
      v = diff * std::exp(-k * k * w * w);
      if (profile.inverse_wavenumber) v /= k;
    }
    raw[l - 1] = v;
  }
  return raw;
}

ModeVector overlap_coefficients(const Region& region,
                                const DetectorProfile& profile,
                                const TruncationSpec& trunc,
                                const ThermalFieldConfig& cfg) {
  ModeVector mv;
  mv.region = region;
  mv.profile = profile;
  mv.l_min = trunc.l_min;
  mv.l_max = trunc.l_max;
  mv.coefficients = raw_overlaps(region, profile, trunc, cfg);

  double norm_sq = 0.0;
  for (double c : mv.coefficients) norm_sq += c * c;
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
    throw DegenerateMode(fmt::format(
        "profile on [{}, {}] has no weight on modes {}..{}", region.left,
        region.right, trunc.l_min, trunc.l_max));
  }
  mv.normalization_constant = 1.0 / std::sqrt(norm_sq);
  for (double& c : mv.coefficients) c *= mv.normalization_constant;
  return mv;
}

double cross_commutator_residual(const ModeVector& r, const ModeVector& q) {
  require_compatible(r, q);
  return dot(r, q);
}

std::pair<ModeVector, ModeVector> orthogonalize_pair(const ModeVector& r,
                                                     const ModeVector& q) {
  const double s = cross_commutator_residual(r, q);
  if (!(std::abs(s) < 1.0 - 1e-12)) {
    throw CannotOrthogonalize(
        fmt::format("mode vectors are parallel (overlap {:.17g})", s));
  }
  // Gram matrix [[1, s], [s, 1]]^(-1/2) = [[c1, c2], [c2, c1]].
  const double plus = 1.0 / std::sqrt(1.0 + s);
  const double minus = 1.0 / std::sqrt(1.0 - s);
  const double c1 = 0.5 * (plus + minus);
  const double c2 = 0.5 * (plus - minus);

  ModeVector r2 = r;
  ModeVector q2 = q;
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) {
    r2.coefficients[i] = c1 * r.coefficients[i] + c2 * q.coefficients[i];
    q2.coefficients[i] = c2 * r.coefficients[i] + c1 * q.coefficients[i];
  }
  normalize(r2);
  normalize(q2);
  r2.orthogonalized = q2.orthogonalized = true;
  return {std::move(r2), std::move(q2)};
}

bool CmAssemblyReport::all_converged() const {
  return std::all_of(series.begin(), series.end(),
                     [](const SeriesStatus& s) { return s.converged; });
}

bool CmAssemblyReport::momentum_divergent() const {
  return !entry(CmEntry::b).converged || !entry(CmEntry::d).converged ||
         !entry(CmEntry::f).converged;
}

bool CmAssemblyReport::usable_for_verdict() const {
  return all_converged() &&
         std::abs(cross_commutator_residual) <= residual_gate;
}

std::string CmAssemblyReport::diagnostic() const {
  std::string out;
  std::string unconverged;
  for (int i = 0; i < 6; ++i) {
    if (!series[i].converged) {
      if (!unconverged.empty()) unconverged += ", ";
      unconverged += kCmEntryNames[i];
      if (series[i].divergent) unconverged += " (divergent)";
    }
  }
  if (!unconverged.empty()) {
    out = fmt::format("mode sums for {} do not converge within {} modes",
                      unconverged, l_max);
    if (momentum_divergent()) {
      out +=
          "; momentum variances grow with every mode when the profile weights "
          "all momenta equally (top hat); use a Gaussian-modulated profile or "
          "a momentum window";
    }
  }
  if (std::abs(cross_commutator_residual) > residual_gate) {
    if (!out.empty()) out += "; ";
    out += fmt::format("cross commutator residual {:.3g} exceeds gate {:.3g}",
                       cross_commutator_residual, residual_gate);
  }
  return out;
}

CmAssemblyReport assemble_cm(const ModeVector& r, const ModeVector& q,
                             const ThermalFieldConfig& cfg,
                             const TruncationSpec& trunc,
                             double residual_gate) {
  require_compatible(r, q);
  validate(cfg);
  validate(trunc);
  if (trunc.l_max > r.l_max) {
    throw InvalidPair(fmt::format(
        "summation window ends at {} beyond the stored coefficients ({})",
        trunc.l_max, r.l_max));
  }

  const std::size_t n = trunc.l_max - trunc.l_min + 1;
  std::array<std::vector<double>, 6> terms;
  for (auto& t : terms) t.resize(n);
  for (int l = trunc.l_min; l <= trunc.l_max; ++l) {
    const double coth = thermal_factor(field_mode(l, cfg), cfg);
    const ModeTerms mt =
        mode_terms(l, r.coefficients[l - 1], q.coefficients[l - 1], coth);
    const std::size_t i = l - trunc.l_min;
    terms[0][i] = mt.a;
    terms[1][i] = mt.b;
    terms[2][i] = mt.c;
    terms[3][i] = mt.d;
    terms[4][i] = mt.e;
    terms[5][i] = mt.f;
  }

  CmAssemblyReport report;
  for (int e = 0; e < 6; ++e) {
    report.series[e] = trunc.preselected
                           ? exact_series(terms[e])
                           : analyze_series(terms[e], trunc.convergence_tol);
  }
  report.cm = {report.series[0].partial_sum, report.series[1].partial_sum,
               report.series[2].partial_sum, report.series[3].partial_sum,
               report.series[4].partial_sum, report.series[5].partial_sum};
  report.cross_commutator_residual = dot(r, q);
  report.residual_gate = residual_gate;
  report.l_min = trunc.l_min;
  report.l_max = trunc.l_max;
  report.preselected = trunc.preselected;
  return report;
}

std::vector<CovarianceMatrix4> assemble_cm_windows(
    const ModeVector& r, const ModeVector& q, const ThermalFieldConfig& cfg,
    int l_min, int l_cap) {
  require_compatible(r, q);
  validate(cfg);
  if (l_min < 1 || l_cap < l_min || l_cap > r.l_max) {
    throw InvalidPair(fmt::format(
        "window range [{}, {}] outside the stored coefficients (1..{})", l_min,
        l_cap, r.l_max));
  }
  std::vector<CovarianceMatrix4> out;
  out.reserve(l_cap - l_min + 1);
  CovarianceMatrix4 acc{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  for (int l = l_min; l <= l_cap; ++l) {
    const double coth = thermal_factor(field_mode(l, cfg), cfg);
    const ModeTerms mt =
        mode_terms(l, r.coefficients[l - 1], q.coefficients[l - 1], coth);
    acc.a_uu += mt.a;
    acc.a_pp += mt.b;
    acc.b_uu += mt.c;
    acc.b_pp += mt.d;
    acc.c_uu += mt.e;
    acc.c_pp += mt.f;
    out.push_back(acc);
  }
  return out;
}

DivergenceError::DivergenceError(CmAssemblyReport report)
    : Error(ErrorCategory::numerical, report.diagnostic()),
      report_(std::move(report)) {}

SeparabilityVerdict verdict_for(const CmAssemblyReport& report, double tol) {
  if (report.momentum_divergent()) throw DivergenceError(report);
  if (!report.all_converged()) throw NumericalError(report.diagnostic());
  if (std::abs(report.cross_commutator_residual) > report.residual_gate) {
    throw InvalidPair(report.diagnostic());
  }
  return separability_test(report.cm, tol);
}

ModePair prepare_mode_pair(const Region& r, const Region& q,
                           const DetectorProfile& profile,
                           const TruncationSpec& profile_trunc,
                           const ThermalFieldConfig& cfg,
                           double residual_gate) {
  if (r.overlaps(q)) {
    throw InvalidPair(fmt::format("regions [{}, {}] and [{}, {}] overlap",
                                  r.left, r.right, q.left, q.right));
  }
  ModePair pair;
  pair.r = overlap_coefficients(r, profile, profile_trunc, cfg);
  pair.q = overlap_coefficients(q, profile, profile_trunc, cfg);
  pair.raw_residual = cross_commutator_residual(pair.r, pair.q);
  pair.residual = pair.raw_residual;
  if (std::abs(pair.raw_residual) > residual_gate) {
    auto [r2, q2] = orthogonalize_pair(pair.r, pair.q);
    pair.r = std::move(r2);
    pair.q = std::move(q2);
    pair.residual = cross_commutator_residual(pair.r, pair.q);
    pair.orthogonalized = true;
  }
  return pair;
}

}  // namespace spatent
