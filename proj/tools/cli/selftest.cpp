// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "selftest.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <random>

#include <spatent/power_law.hpp>
#include <spatent/report_io.hpp>
#include <spatent/sampling.hpp>
#include <spatent/spatial_modes.hpp>
#include <spatent/symplectic.hpp>

namespace spatent::cli {

namespace {

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

double integrate(const auto& f, double a, double b) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

CheckResult symplectic_oracle(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  double worst = 0.0;
  for (int i = 0; i < cfg.selftest.random_cms; ++i) {
    const auto s = random_physical_cm(rng);
    const auto fast = symplectic_eigenvalues(s.cm);
    const auto slow = eigen_oracle(s.cm);
    worst = std::max({worst, rel_diff(fast.nu_plus, slow.nu_plus),
                      rel_diff(fast.nu_minus, slow.nu_minus),
                      rel_diff(fast.nu_minus, s.nu_minus),
                      rel_diff(fast.nu_plus, s.nu_plus)});
  }
  return {"symplectic-oracle", worst <= cfg.selftest.eigen_tol,
          fmt::format("{} states, worst relative difference {:.3g} (tol {:.3g})",
                      cfg.selftest.random_cms, worst, cfg.selftest.eigen_tol)};
}

CheckResult two_mode_squeezed(const RunConfig& cfg) {
  double worst = 0.0;
  for (double r : {0.25, 0.5, 1.0}) {
    const auto v = separability_test(CovarianceMatrix4::two_mode_squeezed(r));
    worst = std::max({worst, rel_diff(v.nu_minus_pt, std::exp(-2.0 * r)),
                      rel_diff(v.log_negativity, 2.0 * r / std::numbers::ln2)});
  }
  return {"two-mode-squeezed", worst <= cfg.selftest.eigen_tol,
          fmt::format("worst relative difference {:.3g} (tol {:.3g})", worst,
                      cfg.selftest.eigen_tol)};
}

CheckResult wick_monte_carlo(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const auto s = random_physical_cm(rng, {3.0, 0.5});
  const double exact = gaussian_fourth_moment(s.cm);
  const auto est = sample_fourth_moment(
      s.cm, static_cast<std::size_t>(cfg.selftest.mc_samples), cfg.seed + 1);
  const double z = std::abs(est.mean - exact) / est.standard_error;
  return {"wick-monte-carlo", z <= cfg.selftest.wick_sigma,
          fmt::format("exact {:.6g}, sampled {:.6g} +- {:.2g} ({:.2f} sigma, "
                      "limit {})",
                      exact, est.mean, est.standard_error, z,
                      cfg.selftest.wick_sigma)};
}

CheckResult mode_orthonormality(const RunConfig& cfg) {
  const auto field = field_config(cfg);
  const int n = cfg.selftest.modes;
  const double box = field.box_length;
  double worst = 0.0;
  for (int l = 1; l <= n; ++l) {
    const auto ml = field_mode(l, field);
    for (int m = l; m <= n; ++m) {
      const auto mm = field_mode(m, field);
      const double v = integrate(
          [&](double x) { return mode_function(ml, x) * mode_function(mm, x); },
          0.0, box);
      worst = std::max(worst, std::abs(v - (l == m ? 1.0 : 0.0)));
    }
  }
  // Closed-form top-hat overlaps against quadrature of the mode functions.
  const Region region = make_region(0.3 * box, 0.45 * box, field);
  DetectorProfile top_hat;
  top_hat.kind = ProfileKind::top_hat;
  TruncationSpec trunc;
  trunc.l_max = n;
  const auto raw = raw_overlaps(region, top_hat, trunc, field);
  for (int l = 1; l <= n; ++l) {
    const auto ml = field_mode(l, field);
    const double v = integrate([&](double x) { return mode_function(ml, x); },
                               region.left, region.right);
    worst = std::max(worst, std::abs(v - raw[l - 1]) / std::sqrt(box));
  }
  const auto mv = overlap_coefficients(region, DetectorProfile{}, trunc, field);
  const double norm_err = std::abs(mv.squared_norm() - 1.0);
  const bool ok = worst <= cfg.selftest.quad_tol && norm_err <= 1e-10;
  return {"mode-orthonormality", ok,
          fmt::format("{} modes, worst quadrature deviation {:.3g} (tol {:.3g}), "
                      "|norm - 1| = {:.3g}",
                      n, worst, cfg.selftest.quad_tol, norm_err)};
}

CheckResult power_law(const RunConfig& cfg) {
  std::vector<std::pair<double, double>> pts;
  for (int k : {2, 3, 4, 6, 8, 12, 16, 20}) {
    const double x = 1.0 / k;
    pts.emplace_back(x, 2.0 * std::pow(x, -0.75));
  }
  const auto fit = fit_power_law(pts);
  const double err = std::abs(fit.exponent + 0.75);
  return {"power-law-fit", err <= cfg.selftest.fit_tol,
          fmt::format("exponent {} (expected -0.75, tol {:.3g})",
                      format_real(fit.exponent), cfg.selftest.fit_tol)};
}

}  // namespace

std::vector<CheckResult> run_selftest(const RunConfig& cfg) {
  return {symplectic_oracle(cfg), two_mode_squeezed(cfg), wick_monte_carlo(cfg),
          mode_orthonormality(cfg), power_law(cfg)};
}

}  // namespace spatent::cli
