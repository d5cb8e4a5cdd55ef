// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/analysis.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "spatent/parallel.hpp"

namespace spatent {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ModePair touching_pair(double width, const ThermalFieldConfig& cfg,
                       const DetectorProfile& profile, int profile_order,
                       std::optional<double> center, double residual_gate) {
  const auto [r, q] = place_pair(width, 0.0, cfg, center);
  TruncationSpec trunc;
  trunc.l_max = profile_order > 0 ? profile_order
                                  : default_profile_order(profile, r, cfg);
  trunc.hard_cap = std::max(trunc.hard_cap, trunc.l_max);
  return prepare_mode_pair(r, q, profile, trunc, cfg, residual_gate);
}

void fill_point(SweepPoint& pt, const CmAssemblyReport& report, double tol) {
  pt.cm = report.cm;
  pt.has_cm = true;
  for (const auto& s : report.series) {
    if (!s.converged) pt.flags |= point_flags::kUnconverged;
  }
  if (report.momentum_divergent()) pt.flags |= point_flags::kDivergent;
  if (std::abs(report.cross_commutator_residual) > report.residual_gate) {
    pt.flags |= point_flags::kResidual;
  }
  pt.purity_threshold = purity_threshold(report.cm);
  pt.purity = kNaN;
  if (!report.usable_for_verdict()) {
    pt.error = report.diagnostic();
    return;
  }
  pt.verdict = separability_test(report.cm, tol);
  pt.has_verdict = true;
  if (pt.verdict.verdict == Verdict::physicality_violated) {
    pt.flags |= point_flags::kUnphysical;
  } else {
    pt.purity = purity(report.cm, tol);
  }
}

}  // namespace

std::pair<Region, Region> place_pair(double width, double separation,
                                     const ThermalFieldConfig& cfg,
                                     std::optional<double> center) {
  if (!(separation >= 0.0)) {
    throw InvalidInput(
        fmt::format("separation {} < 0: regions would overlap", separation));
  }
  if (!(width > 0.0)) throw InvalidInput("region width must be > 0");
  const double c = center.value_or(0.5 * cfg.box_length);
  const double r_right = c - 0.5 * separation;
  const double q_left = c + 0.5 * separation;
  // Grids that end exactly on a wall should not fail on the last ulp.
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                       cfg.box_length;
  auto snap = [&](double x) {
    if (std::abs(x) <= slack) return 0.0;
    if (std::abs(x - cfg.box_length) <= slack) return cfg.box_length;
    return x;
  };
  return {make_region(snap(r_right - width), r_right, cfg),
          make_region(q_left, snap(q_left + width), cfg)};
}

std::string flags_to_string(unsigned flags) {
  if (flags == 0) return "ok";
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if (flags & bit) {
      if (!out.empty()) out += '|';
      out += name;
    }
  };
  add(point_flags::kDivergent, "divergent");
  add(point_flags::kUnphysical, "unphysical");
  add(point_flags::kResidual, "residual");
  add(point_flags::kUnconverged, "unconverged");
  add(point_flags::kError, "error");
  add(point_flags::kOrthogonalized, "orthogonalized");
  return out;
}

void validate(const SweepSpec& spec, const ThermalFieldConfig& cfg) {
  validate(cfg);
  if (spec.separations.empty() || spec.temperatures.empty()) {
    throw InvalidInput("sweep grids must be non-empty");
  }
  for (double t : spec.temperatures) {
    if (!std::isfinite(t) || t < 0.0) {
      throw InvalidInput(fmt::format("temperature {} must be >= 0", t));
    }
  }
  for (double s : spec.separations) {
    place_pair(spec.region_width, s, cfg, spec.center);
  }
  if (spec.momentum_window < 0) throw InvalidInput("momentum_window < 0");
  if (spec.l_min < 1) throw InvalidInput("l_min must be >= 1");
}

namespace {

struct PreparedPair {
  ModePair pair;
  TruncationSpec sum_trunc;
};

PreparedPair prepare_for_sweep(const Region& r, const Region& q,
                               const SweepSpec& spec,
                               const ThermalFieldConfig& cfg) {
  TruncationSpec profile_trunc;
  profile_trunc.l_min = spec.l_min;
  profile_trunc.hard_cap = spec.hard_cap;
  profile_trunc.convergence_tol = spec.convergence_tol;
  profile_trunc.l_max =
      spec.profile_order > 0
          ? spec.profile_order
          : default_profile_order(spec.profile, r, cfg, spec.hard_cap);
  PreparedPair out{prepare_mode_pair(r, q, spec.profile, profile_trunc, cfg,
                                     spec.residual_gate),
                   profile_trunc};
  if (spec.momentum_window > 0) {
    out.sum_trunc.l_max = std::min(spec.momentum_window, profile_trunc.l_max);
    out.sum_trunc.preselected = true;
  }
  return out;
}

void evaluate_into(SweepPoint& pt, const PreparedPair& prep,
                   const SweepSpec& spec, const ThermalFieldConfig& cfg) {
  pt.raw_residual = prep.pair.raw_residual;
  pt.residual = prep.pair.residual;
  if (prep.pair.orthogonalized) pt.flags |= point_flags::kOrthogonalized;
  try {
    const auto report =
        assemble_cm(prep.pair.r, prep.pair.q, cfg.at_temperature(pt.temperature),
                    prep.sum_trunc, spec.residual_gate);
    fill_point(pt, report, spec.tolerance);
  } catch (const Error& e) {
    pt.flags |= point_flags::kError;
    pt.error = e.what();
  }
}

}  // namespace

SweepPoint evaluate_pair(const Region& r, const Region& q, double temperature,
                         const SweepSpec& spec, const ThermalFieldConfig& cfg) {
  validate(cfg);
  if (r.overlaps(q)) {
    throw InvalidPair(fmt::format(
        "regions [{}, {}] and [{}, {}] overlap", r.left, r.right, q.left,
        q.right));
  }
  if (!(temperature >= 0.0)) throw InvalidInput("temperature must be >= 0");
  SweepPoint pt;
  pt.separation = q.left - r.right;
  pt.temperature = temperature;
  evaluate_into(pt, prepare_for_sweep(r, q, spec, cfg), spec, cfg);
  return pt;
}

SweepResult run_sweep(const SweepSpec& spec, const ThermalFieldConfig& cfg) {
  validate(spec, cfg);
  SweepResult result;
  result.separations = spec.separations;
  result.temperatures = spec.temperatures;
  result.points.resize(spec.separations.size() * spec.temperatures.size());
  const std::size_t cols = spec.temperatures.size();

  parallel_for(spec.separations.size(), spec.threads, [&](std::size_t i) {
    const double sep = spec.separations[i];
    for (std::size_t j = 0; j < cols; ++j) {
      auto& pt = result.points[i * cols + j];
      pt.separation = sep;
      pt.temperature = spec.temperatures[j];
    }
    try {
      const auto [r, q] = place_pair(spec.region_width, sep, cfg, spec.center);
      const PreparedPair prep = prepare_for_sweep(r, q, spec, cfg);
      for (std::size_t j = 0; j < cols; ++j) {
        evaluate_into(result.points[i * cols + j], prep, spec, cfg);
      }
    } catch (const Error& e) {
      for (std::size_t j = 0; j < cols; ++j) {
        auto& pt = result.points[i * cols + j];
        pt.flags |= point_flags::kError;
        pt.error = e.what();
      }
    }
  });
  return result;
}

// ---------------------------------------------------------------------------

WindowedPair::WindowedPair(double width, const ThermalFieldConfig& cfg,
                           const WindowScanOptions& opts)
    : cfg_(cfg), opts_(opts) {
  validate(cfg);
  if (opts.l_min < 1 || opts.window_cap < opts.l_min ||
      opts.window_cap > opts.profile_order) {
    throw InvalidInput(fmt::format(
        "window scan needs 1 <= l_min <= window_cap <= profile_order "
        "(got {}, {}, {})",
        opts.l_min, opts.window_cap, opts.profile_order));
  }
  DetectorProfile top_hat;
  top_hat.kind = ProfileKind::top_hat;
  pair_ = touching_pair(width, cfg, top_hat, opts.profile_order, opts.center,
                        opts.residual_gate);
}

std::vector<Verdict> WindowedPair::verdicts(double temperature) const {
  const auto cms = assemble_cm_windows(pair_.r, pair_.q,
                                       cfg_.at_temperature(temperature),
                                       opts_.l_min, opts_.window_cap);
  std::vector<Verdict> out;
  out.reserve(cms.size());
  for (const auto& cm : cms) {
    out.push_back(separability_test(cm, opts_.tolerance).verdict);
  }
  return out;
}

bool WindowedPair::any_entangled(double temperature) const {
  for (Verdict v : verdicts(temperature)) {
    if (v == Verdict::entangled) return true;
  }
  return false;
}

MomentumWindow momentum_window_scan(double width,
                                    const ThermalFieldConfig& cfg,
                                    double temperature,
                                    const WindowScanOptions& opts) {
  const WindowedPair model(width, cfg, opts);
  MomentumWindow out;
  out.region_width = width;
  out.temperature = temperature;
  out.residual = model.pair().residual;
  out.verdicts = model.verdicts(temperature);

  bool in_run = false;
  bool run_closed = false;
  for (std::size_t i = 0; i < out.verdicts.size(); ++i) {
    const int modes = static_cast<int>(i) + 1;  // l_max - l_min + 1
    if (out.verdicts[i] == Verdict::entangled) {
      ++out.entangled_windows;
      if (!out.min_modes) out.min_modes = modes;
      if (!run_closed) {
        in_run = true;
        out.max_modes = modes;
      }
    } else if (in_run) {
      in_run = false;
      run_closed = true;
    }
  }
  out.open_window = in_run;
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(TcRoute route) {
  return route == TcRoute::gaussian_modulated ? "gaussian" : "tophat-window";
}

TcRoute tc_route_from_string(std::string_view name) {
  if (name == "gaussian" || name == "gaussian_modulated") {
    return TcRoute::gaussian_modulated;
  }
  if (name == "tophat-window" || name == "truncated_top_hat" ||
      name == "tophat") {
    return TcRoute::truncated_top_hat;
  }
  throw InvalidInput(fmt::format("unknown critical-temperature route '{}'",
                                 name));
}

std::string_view to_string(TcStatus status) {
  switch (status) {
    case TcStatus::found:
      return "found";
    case TcStatus::not_entangled:
      return "not_entangled";
    case TcStatus::unbounded:
      return "unbounded";
  }
  return "?";
}

NonMonotoneIndicator::NonMonotoneIndicator(double lower, double upper,
                                           double revisited)
    : Error(ErrorCategory::numerical,
            fmt::format("entanglement indicator is not monotone in T: "
                        "entangled at {:.6g}, separable at {:.6g}, entangled "
                        "again at {:.6g}",
                        lower, upper, revisited)),
      lower_(lower),
      upper_(upper) {}

CriticalTemperature bisect_critical_temperature(
    const std::function<bool(double)>& entangled_at, const TcOptions& opts) {
  if (!(opts.relative_width > 0.0) || !(opts.initial_upper > 0.0) ||
      !(opts.ceiling >= opts.initial_upper)) {
    throw InvalidInput("invalid bisection options");
  }
  CriticalTemperature out;
  auto eval = [&](double t) {
    ++out.evaluations;
    return entangled_at(t);
  };

  if (!eval(0.0)) {
    out.status = TcStatus::not_entangled;
    return out;
  }
  double lo = 0.0;
  double hi = opts.initial_upper;
  while (eval(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > opts.ceiling) {
      out.status = TcStatus::unbounded;
      out.lower = lo;
      out.upper = std::numeric_limits<double>::infinity();
      out.value = std::numeric_limits<double>::infinity();
      return out;
    }
  }
  double probe = hi;
  for (int i = 0; i < opts.monotonicity_probes; ++i) {
    probe *= 2.0;
    if (probe > opts.ceiling) break;
    if (eval(probe)) throw NonMonotoneIndicator(lo, hi, probe);
  }
  while (hi - lo > opts.relative_width * hi) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.status = TcStatus::found;
  out.lower = lo;
  out.upper = hi;
  out.value = 0.5 * (lo + hi);
  return out;
}

CriticalTemperature critical_temperature(double width,
                                         const ThermalFieldConfig& cfg,
                                         TcRoute route,
                                         const TcOptions& opts) {
  if (route == TcRoute::truncated_top_hat) {
    WindowScanOptions wopts = opts.window;
    if (opts.center) wopts.center = opts.center;
    const WindowedPair model(width, cfg, wopts);
    return bisect_critical_temperature(
        [&](double t) { return model.any_entangled(t); }, opts);
  }

  DetectorProfile profile = opts.gaussian_profile;
  profile.kind = ProfileKind::gaussian_modulated;
  const ModePair pair = touching_pair(width, cfg, profile, opts.profile_order,
                                      opts.center, opts.residual_gate);
  TruncationSpec trunc;
  trunc.l_max = pair.r.l_max;
  trunc.hard_cap = std::max(trunc.hard_cap, trunc.l_max);
  return bisect_critical_temperature(
      [&](double t) {
        const auto report = assemble_cm(pair.r, pair.q, cfg.at_temperature(t),
                                        trunc, opts.residual_gate);
        return verdict_for(report, opts.tolerance).verdict ==
               Verdict::entangled;
      },
      opts);
}

CriticalTemperatureCurve critical_temperature_curve(
    std::span<const double> widths, const ThermalFieldConfig& cfg,
    TcRoute route, const TcOptions& opts, unsigned threads) {
  CriticalTemperatureCurve curve;
  curve.route = route;
  curve.widths.assign(widths.begin(), widths.end());
  curve.temperatures.resize(widths.size());
  parallel_for(widths.size(), threads, [&](std::size_t i) {
    curve.temperatures[i] = critical_temperature(widths[i], cfg, route, opts);
  });

  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    const auto& tc = curve.temperatures[i];
    if (tc.status == TcStatus::found && tc.value > 0.0) {
      points.emplace_back(widths[i], tc.value);
    }
  }
  if (points.size() >= 3) curve.fit = fit_power_law(points);
  return curve;
}

// ---------------------------------------------------------------------------

PurityCrossCheck purity_cross_check(const CovarianceMatrix4& cm, double tol) {
  const SeparabilityVerdict v = separability_test(cm, tol);
  if (!v.valid()) {
    throw UnphysicalState("purity cross-check needs a physical state");
  }
  PurityCrossCheck out;
  out.purity = purity(cm, tol);
  out.threshold = purity_threshold(cm);
  out.purity_says_entangled = out.purity > out.threshold;
  out.ppt_says_entangled = v.verdict == Verdict::entangled;
  out.criterion_det = v.criterion_det;
  out.criterion_swapped = v.criterion_swapped;
  return out;
}

}  // namespace spatent
