// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "run_config.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <sstream>

#include <spatent/error.hpp>
#include <spatent/report_io.hpp>

namespace spatent::cli {

namespace {

// "--foo_bar,--foo-bar": INI keys match the underscore spelling.
std::string option_names(const std::string& key) {
  std::string dashed = key;
  for (char& c : dashed) {
    if (c == '_') c = '-';
  }
  return dashed == key ? "--" + key : "--" + key + ",--" + dashed;
}

template <typename T>
CLI::Option* add(CLI::App* app, const std::string& key, T& value,
                 const std::string& help) {
  return app->add_option(option_names(key), value, help)->capture_default_str();
}

CLI::Option* add_flag(CLI::App* app, const std::string& key, bool& value,
                      const std::string& help) {
  return app->add_flag(option_names(key), value, help);
}

void add_profile(CLI::App* app, ProfileKeys& k) {
  add(app, "profile", k.profile, "detector profile: gaussian or tophat");
  add(app, "width", k.width, "region width");
  add(app, "modulation_width", k.modulation_width,
      "Gaussian modulation width w (0: region width)");
  add_flag(app, "inverse_k", k.inverse_k,
           "keep the 1/k factor in the Gaussian profile");
  add(app, "profile_order", k.profile_order,
      "modes resolved in each profile (0: automatic)");
  add(app, "window", k.window,
      "momentum window: state restricted to l <= window (0: none)");
  add(app, "l_min", k.l_min, "lowest field mode");
  add(app, "convergence_tol", k.convergence_tol, "series tail tolerance");
  add(app, "hard_cap", k.hard_cap, "maximum number of field modes");
  add(app, "residual_gate", k.residual_gate,
      "largest cross-commutator residual accepted for a verdict");
  add(app, "tolerance", k.tolerance, "verdict tolerance on nu");
  add(app, "center", k.center, "midpoint of the pair (0: box centre)");
}

void add_grid(CLI::App* app, GridKeys& g) {
  add(app, "separation_min", g.separation_min, "smallest separation");
  add(app, "separation_max", g.separation_max, "largest separation");
  add(app, "separation_count", g.separation_count, "number of separations");
  add(app, "temperature_min", g.temperature_min, "lowest temperature");
  add(app, "temperature_max", g.temperature_max, "highest temperature");
  add(app, "temperature_count", g.temperature_count, "number of temperatures");
  add(app, "temperature_scale", g.temperature_scale, "log or linear");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

void check_profile(const ProfileKeys& k) {
  profile_kind_from_string(k.profile);
  require(k.width > 0.0, "width must be > 0");
  require(k.modulation_width >= 0.0, "modulation_width must be >= 0");
  require(k.profile_order >= 0, "profile_order must be >= 0");
  require(k.window >= 0, "window must be >= 0");
  require(k.l_min >= 1, "l_min must be >= 1");
  require(k.convergence_tol > 0.0, "convergence_tol must be > 0");
  require(k.hard_cap >= 1 && k.hard_cap <= kHardCap,
          fmt::format("hard_cap must lie in [1, {}]", kHardCap));
  require(k.profile_order <= k.hard_cap, "profile_order exceeds hard_cap");
  require(k.residual_gate > 0.0, "residual_gate must be > 0");
  require(k.tolerance >= 0.0, "tolerance must be >= 0");
  require(k.center >= 0.0, "center must be >= 0");
}

void check_grid(const GridKeys& g) {
  require(g.separation_count >= 1, "separation_count must be >= 1");
  require(g.temperature_count >= 1, "temperature_count must be >= 1");
  require(g.separation_min >= 0.0 && g.separation_max >= g.separation_min,
          "need 0 <= separation_min <= separation_max");
  require(g.temperature_scale == "log" || g.temperature_scale == "linear",
          "temperature_scale must be log or linear");
  if (g.temperature_scale == "log") {
    require(g.temperature_min > 0.0 && g.temperature_max >= g.temperature_min,
            "log temperature grid needs 0 < temperature_min <= "
            "temperature_max");
  } else {
    require(g.temperature_min >= 0.0 && g.temperature_max >= g.temperature_min,
            "need 0 <= temperature_min <= temperature_max");
  }
}

void check_widths(const std::vector<double>& widths, double box) {
  for (double w : widths) {
    require(w > 0.0 && 2.0 * w <= box,
            fmt::format("width {} must lie in (0, L/2]", w));
  }
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  }
  if (n > 1) out.back() = hi;
  return out;
}

class Canonical {
 public:
  Canonical& put(const std::string& key, double v) {
    return put_raw(key, format_real(v));
  }
  Canonical& put(const std::string& key, int v) {
    return put_raw(key, std::to_string(v));
  }
  Canonical& put(const std::string& key, bool v) {
    return put_raw(key, v ? "true" : "false");
  }
  Canonical& put(const std::string& key, const std::string& v) {
    return put_raw(key, v);
  }
  Canonical& put(const std::string& key, const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += format_real(v[i]);
    }
    return put_raw(key, s);
  }
  std::string str() const { return os_.str(); }

  std::string section;

 private:
  Canonical& put_raw(const std::string& key, const std::string& v) {
    os_ << section << '.' << key << " = " << v << '\n';
    return *this;
  }
  std::ostringstream os_;
};

void canon_profile(Canonical& c, const ProfileKeys& k) {
  c.put("profile", k.profile)
      .put("width", k.width)
      .put("modulation_width", k.modulation_width)
      .put("inverse_k", k.inverse_k)
      .put("profile_order", k.profile_order)
      .put("window", k.window)
      .put("l_min", k.l_min)
      .put("convergence_tol", k.convergence_tol)
      .put("hard_cap", k.hard_cap)
      .put("residual_gate", k.residual_gate)
      .put("tolerance", k.tolerance)
      .put("center", k.center);
}

void canon_grid(Canonical& c, const GridKeys& g) {
  c.put("separation_min", g.separation_min)
      .put("separation_max", g.separation_max)
      .put("separation_count", g.separation_count)
      .put("temperature_min", g.temperature_min)
      .put("temperature_max", g.temperature_max)
      .put("temperature_count", g.temperature_count)
      .put("temperature_scale", g.temperature_scale);
}

}  // namespace

void register_options(CLI::App& app, RunConfig& cfg) {
  add(&app, "box_length", cfg.field.box_length, "box length L");
  add(&app, "mass", cfg.field.mass, "particle mass m");
  add(&app, "hbar", cfg.field.hbar, "reduced Planck constant");
  add(&app, "boltzmann", cfg.field.boltzmann, "Boltzmann constant");
  add(&app, "chemical_potential", cfg.field.chemical_potential,
      "chemical potential (below the lowest mode energy)");
  add(&app, "seed", cfg.seed, "seed for Monte-Carlo checks");
  add(&app, "threads", cfg.threads, "worker threads");
  add(&app, "out", cfg.out_dir, "output directory")->envname(kOutDirEnv);

  auto* verdict = app.get_subcommand("verdict");
  add_profile(verdict, cfg.verdict.profile);
  add(verdict, "separation", cfg.verdict.separation, "gap between regions");
  add(verdict, "temperature", cfg.verdict.temperature, "temperature");
  add(verdict, "r_left", cfg.verdict.r_left, "explicit region R, left edge");
  add(verdict, "r_right", cfg.verdict.r_right,
      "explicit region R, right edge (> 0 enables explicit regions)");
  add(verdict, "q_left", cfg.verdict.q_left, "explicit region Q, left edge");
  add(verdict, "q_right", cfg.verdict.q_right, "explicit region Q, right edge");
  add(verdict, "format", cfg.verdict.format, "text or json");

  auto* sweep = app.get_subcommand("sweep");
  add_profile(sweep, cfg.sweep.profile);
  add_grid(sweep, cfg.sweep.grid);

  auto* window = app.get_subcommand("window");
  add(window, "widths", cfg.window.widths, "region widths")->delimiter(',');
  add(window, "temperatures", cfg.window.temperatures, "temperatures")
      ->delimiter(',');
  add(window, "l_min", cfg.window.l_min, "lowest field mode");
  add(window, "window_cap", cfg.window.window_cap, "largest window scanned");
  add(window, "profile_order", cfg.window.profile_order,
      "modes resolved in each top-hat profile");
  add(window, "residual_gate", cfg.window.residual_gate,
      "largest cross-commutator residual accepted");
  add(window, "tolerance", cfg.window.tolerance, "verdict tolerance on nu");

  auto* tc = app.get_subcommand("tc");
  add(tc, "route", cfg.tc.route, "tophat-window, gaussian or both");
  add(tc, "widths", cfg.tc.widths, "region widths")->delimiter(',');
  add(tc, "relative_width", cfg.tc.relative_width,
      "bisection stops at (hi - lo) <= relative_width * hi");
  add(tc, "initial_upper", cfg.tc.initial_upper, "first bracket upper end");
  add(tc, "ceiling", cfg.tc.ceiling, "give up above this temperature");
  add(tc, "monotonicity_probes", cfg.tc.monotonicity_probes,
      "doublings past the bracket that must stay separable");
  add(tc, "l_min", cfg.tc.l_min, "lowest field mode");
  add(tc, "window_cap", cfg.tc.window_cap, "largest window scanned");
  add(tc, "profile_order", cfg.tc.profile_order,
      "modes resolved in each profile (0: route default)");
  add(tc, "modulation_width", cfg.tc.modulation_width,
      "Gaussian modulation width w (0: region width)");
  add_flag(tc, "inverse_k", cfg.tc.inverse_k,
           "keep the 1/k factor in the Gaussian profile");
  add(tc, "residual_gate", cfg.tc.residual_gate,
      "largest cross-commutator residual accepted");
  add(tc, "tolerance", cfg.tc.tolerance, "verdict tolerance on nu");

  auto* extract = app.get_subcommand("extract");
  add_profile(extract, cfg.extract.profile);
  add_grid(extract, cfg.extract.grid);
  add(extract, "gamma_eff", cfg.extract.gamma_eff, "integrated coupling");
  add(extract, "probe_mass", cfg.extract.probe_mass, "probe mass");
  add(extract, "probe_frequency", cfg.extract.probe_frequency,
      "probe frequency");

  auto* selftest = app.get_subcommand("selftest");
  add(selftest, "random_cms", cfg.selftest.random_cms,
      "random states for the symplectic oracle");
  add(selftest, "eigen_tol", cfg.selftest.eigen_tol,
      "relative tolerance against the eigensolver");
  add(selftest, "mc_samples", cfg.selftest.mc_samples,
      "Monte-Carlo samples for the Wick check");
  add(selftest, "wick_sigma", cfg.selftest.wick_sigma,
      "allowed deviation in standard errors");
  add(selftest, "modes", cfg.selftest.modes, "modes in the quadrature check");
  add(selftest, "quad_tol", cfg.selftest.quad_tol, "quadrature tolerance");
  add(selftest, "fit_tol", cfg.selftest.fit_tol,
      "exponent tolerance on exact synthetic data");
}

ThermalFieldConfig field_config(const RunConfig& cfg) {
  ThermalFieldConfig f;
  f.box_length = cfg.field.box_length;
  f.mass = cfg.field.mass;
  f.hbar = cfg.field.hbar;
  f.boltzmann = cfg.field.boltzmann;
  f.chemical_potential = cfg.field.chemical_potential;
  return f;
}

DetectorProfile detector_profile(const ProfileKeys& keys) {
  DetectorProfile p;
  p.kind = profile_kind_from_string(keys.profile);
  p.modulation_width = keys.modulation_width;
  p.inverse_wavenumber = keys.inverse_k;
  return p;
}

SweepSpec sweep_spec(const ProfileKeys& keys, const RunConfig& cfg) {
  SweepSpec s;
  s.profile = detector_profile(keys);
  s.region_width = keys.width;
  s.profile_order = keys.profile_order;
  s.momentum_window = keys.window;
  s.l_min = keys.l_min;
  s.convergence_tol = keys.convergence_tol;
  s.hard_cap = keys.hard_cap;
  if (keys.center > 0.0) s.center = keys.center;
  s.residual_gate = keys.residual_gate;
  s.tolerance = keys.tolerance;
  s.threads = cfg.threads;
  return s;
}

std::vector<double> separation_grid(const GridKeys& grid) {
  return linspace(grid.separation_min, grid.separation_max,
                  grid.separation_count);
}

std::vector<double> temperature_grid(const GridKeys& grid) {
  if (grid.temperature_scale == "linear") {
    return linspace(grid.temperature_min, grid.temperature_max,
                    grid.temperature_count);
  }
  auto exps = linspace(std::log10(grid.temperature_min),
                       std::log10(grid.temperature_max),
                       grid.temperature_count);
  for (double& e : exps) e = std::pow(10.0, e);
  exps.front() = grid.temperature_min;
  exps.back() = grid.temperature_max;
  return exps;
}

std::vector<double> window_widths(const RunConfig& cfg) {
  if (!cfg.window.widths.empty()) return cfg.window.widths;
  std::vector<double> w;
  for (int n : {4, 6, 8, 12, 16}) w.push_back(cfg.field.box_length / n);
  return w;
}

std::vector<double> tc_widths(const RunConfig& cfg) {
  if (!cfg.tc.widths.empty()) return cfg.tc.widths;
  std::vector<double> w;
  for (int n : {2, 3, 4, 6, 8, 12, 16, 20}) {
    w.push_back(cfg.field.box_length / n);
  }
  return w;
}

ProbeCoupling probe_coupling(const ExtractKeys& keys, const RunConfig& cfg) {
  ProbeCoupling c;
  c.gamma_eff = keys.gamma_eff;
  c.probe_mass = keys.probe_mass;
  c.probe_frequency = keys.probe_frequency;
  c.hbar = cfg.field.hbar;
  return c;
}

void validate(const RunConfig& cfg, const std::string& command) {
  const auto field = field_config(cfg);
  validate(field);
  require(cfg.threads >= 1 && cfg.threads <= 1024,
          "threads must lie in [1, 1024]");
  const double box = field.box_length;

  if (command == "verdict") {
    const auto& v = cfg.verdict;
    check_profile(v.profile);
    require(v.temperature >= 0.0 && std::isfinite(v.temperature),
            "temperature must be >= 0");
    require(v.format == "text" || v.format == "json",
            "format must be text or json");
    if (v.r_right > 0.0) {
      make_region(v.r_left, v.r_right, field);
      make_region(v.q_left, v.q_right, field);
    } else {
      require(v.separation >= 0.0, "separation must be >= 0");
    }
  } else if (command == "sweep") {
    check_profile(cfg.sweep.profile);
    check_grid(cfg.sweep.grid);
  } else if (command == "window") {
    const auto& w = cfg.window;
    check_widths(w.widths, box);
    require(!w.temperatures.empty(), "temperatures must not be empty");
    for (double t : w.temperatures) {
      require(t >= 0.0 && std::isfinite(t), "temperatures must be >= 0");
    }
    require(w.l_min >= 1, "l_min must be >= 1");
    require(w.window_cap >= w.l_min, "window_cap must be >= l_min");
    require(w.profile_order >= w.window_cap && w.profile_order <= kHardCap,
            fmt::format("profile_order must lie in [window_cap, {}]",
                        kHardCap));
    require(w.residual_gate > 0.0, "residual_gate must be > 0");
    require(w.tolerance >= 0.0, "tolerance must be >= 0");
  } else if (command == "tc") {
    const auto& t = cfg.tc;
    require(t.route == "both" || t.route == "gaussian" ||
                t.route == "tophat-window",
            "route must be tophat-window, gaussian or both");
    check_widths(t.widths, box);
    require(t.relative_width > 0.0 && t.relative_width < 1.0,
            "relative_width must lie in (0, 1)");
    require(t.initial_upper > 0.0 && t.ceiling >= t.initial_upper,
            "need 0 < initial_upper <= ceiling");
    require(t.monotonicity_probes >= 0, "monotonicity_probes must be >= 0");
    require(t.l_min >= 1, "l_min must be >= 1");
    require(t.window_cap >= t.l_min, "window_cap must be >= l_min");
    require(t.profile_order >= 0 && t.profile_order <= kHardCap,
            "profile_order out of range");
    require(t.profile_order == 0 || t.route == "gaussian" ||
                t.profile_order >= t.window_cap,
            "profile_order must be >= window_cap on the window route");
    require(t.modulation_width >= 0.0, "modulation_width must be >= 0");
    require(t.residual_gate > 0.0, "residual_gate must be > 0");
    require(t.tolerance >= 0.0, "tolerance must be >= 0");
  } else if (command == "extract") {
    check_profile(cfg.extract.profile);
    check_grid(cfg.extract.grid);
    validate(probe_coupling(cfg.extract, cfg));
  } else if (command == "selftest") {
    const auto& s = cfg.selftest;
    require(s.random_cms >= 1, "random_cms must be >= 1");
    require(s.eigen_tol > 0.0, "eigen_tol must be > 0");
    require(s.mc_samples >= 100, "mc_samples must be >= 100");
    require(s.wick_sigma > 0.0, "wick_sigma must be > 0");
    require(s.modes >= 1 && s.modes <= 64, "modes must lie in [1, 64]");
    require(s.quad_tol > 0.0, "quad_tol must be > 0");
    require(s.fit_tol > 0.0, "fit_tol must be > 0");
  } else {
    throw InvalidInput("unknown command " + command);
  }
}

std::string canonical_form(const RunConfig& cfg, const std::string& command) {
  Canonical c;
  c.section = "field";
  c.put("box_length", cfg.field.box_length)
      .put("mass", cfg.field.mass)
      .put("hbar", cfg.field.hbar)
      .put("boltzmann", cfg.field.boltzmann)
      .put("chemical_potential", cfg.field.chemical_potential)
      .put("seed", std::to_string(cfg.seed));
  c.section = command;
  if (command == "verdict") {
    const auto& v = cfg.verdict;
    canon_profile(c, v.profile);
    c.put("separation", v.separation)
        .put("temperature", v.temperature)
        .put("r_left", v.r_left)
        .put("r_right", v.r_right)
        .put("q_left", v.q_left)
        .put("q_right", v.q_right);
  } else if (command == "sweep") {
    canon_profile(c, cfg.sweep.profile);
    canon_grid(c, cfg.sweep.grid);
  } else if (command == "window") {
    const auto& w = cfg.window;
    c.put("widths", window_widths(cfg))
        .put("temperatures", w.temperatures)
        .put("l_min", w.l_min)
        .put("window_cap", w.window_cap)
        .put("profile_order", w.profile_order)
        .put("residual_gate", w.residual_gate)
        .put("tolerance", w.tolerance);
  } else if (command == "tc") {
    const auto& t = cfg.tc;
    c.put("route", t.route)
        .put("widths", tc_widths(cfg))
        .put("relative_width", t.relative_width)
        .put("initial_upper", t.initial_upper)
        .put("ceiling", t.ceiling)
        .put("monotonicity_probes", t.monotonicity_probes)
        .put("l_min", t.l_min)
        .put("window_cap", t.window_cap)
        .put("profile_order", t.profile_order)
        .put("modulation_width", t.modulation_width)
        .put("inverse_k", t.inverse_k)
        .put("residual_gate", t.residual_gate)
        .put("tolerance", t.tolerance);
  } else if (command == "extract") {
    const auto& e = cfg.extract;
    canon_profile(c, e.profile);
    canon_grid(c, e.grid);
    c.put("gamma_eff", e.gamma_eff)
        .put("probe_mass", e.probe_mass)
        .put("probe_frequency", e.probe_frequency);
  } else if (command == "selftest") {
    const auto& s = cfg.selftest;
    c.put("random_cms", s.random_cms)
        .put("eigen_tol", s.eigen_tol)
        .put("mc_samples", s.mc_samples)
        .put("wick_sigma", s.wick_sigma)
        .put("modes", s.modes)
        .put("quad_tol", s.quad_tol)
        .put("fit_tol", s.fit_tol);
  }
  return c.str();
}

std::string config_hash(const RunConfig& cfg, const std::string& command) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_form(cfg, command)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace spatent::cli
