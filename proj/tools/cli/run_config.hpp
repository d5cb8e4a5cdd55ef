// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <spatent/analysis.hpp>
#include <spatent/extraction.hpp>
#include <spatent/field.hpp>

namespace CLI {
class App;
}

namespace spatent::cli {

/// Field constants shared by every subcommand (top of the INI file).
struct FieldKeys {
  double box_length = 1.0;
  double mass = 0.5;
  double hbar = 1.0;
  double boltzmann = 1.0;
  double chemical_potential = 0.0;
};

/// Detector profile and truncation keys for verdict, sweep and extract.
struct ProfileKeys {
  std::string profile = "gaussian";
  double width = 0.1;
  double modulation_width = 0.0;
  bool inverse_k = false;
  int profile_order = 0;
  int window = 0;
  int l_min = 1;
  double convergence_tol = 1e-8;
  int hard_cap = kHardCap;
  double residual_gate = kResidualGate;
  double tolerance = kVerdictTolerance;
  double center = 0.0;  ///< 0: middle of the box
};

struct VerdictKeys {
  ProfileKeys profile;
  double separation = 0.05;
  double temperature = 0.01;
  /// Explicit regions; used instead of width/separation when r_right > 0.
  double r_left = 0.0;
  double r_right = 0.0;
  double q_left = 0.0;
  double q_right = 0.0;
  std::string format = "text";
};

struct GridKeys {
  double separation_min = 0.0;
  double separation_max = 0.8;
  int separation_count = 20;
  double temperature_min = 1e-2;
  double temperature_max = 1e3;
  int temperature_count = 20;
  std::string temperature_scale = "log";
};

struct SweepKeys {
  ProfileKeys profile;
  GridKeys grid;
};

struct WindowKeys {
  std::vector<double> widths;  ///< empty: L/4, L/6, L/8, L/12, L/16
  std::vector<double> temperatures{1.0};
  int l_min = 1;
  int window_cap = 2000;
  int profile_order = kHardCap;
  double residual_gate = kResidualGate;
  double tolerance = kVerdictTolerance;
};

struct TcKeys {
  std::string route = "tophat-window";
  std::vector<double> widths;  ///< empty: L/2 ... L/20, eight sizes
  double relative_width = 1e-3;
  double initial_upper = 1.0;
  double ceiling = 1e6;
  int monotonicity_probes = 2;
  int l_min = 1;
  int window_cap = 2000;
  int profile_order = 0;  ///< 0: route default
  double modulation_width = 0.0;
  bool inverse_k = false;
  double residual_gate = kResidualGate;
  double tolerance = kVerdictTolerance;
};

struct ExtractKeys {
  ProfileKeys profile;
  GridKeys grid;
  double gamma_eff = 0.01;
  double probe_mass = 1.0;
  double probe_frequency = 1000.0;
};

struct SelftestKeys {
  int random_cms = 1000;
  double eigen_tol = 1e-9;
  int mc_samples = 1000000;
  double wick_sigma = 3.0;
  int modes = 8;
  double quad_tol = 1e-10;
  double fit_tol = 1e-12;
};

struct RunConfig {
  FieldKeys field;
  std::uint64_t seed = 20260417;
  unsigned threads = 1;
  std::string out_dir = "spatent-out";
  std::string config_path;

  VerdictKeys verdict;
  SweepKeys sweep;
  WindowKeys window;
  TcKeys tc;
  ExtractKeys extract;
  SelftestKeys selftest;
};

inline constexpr const char* kOutDirEnv = "SPATENT_OUT_DIR";

/// Declares every key as a long option on the matching subcommand, so that
/// INI sections, command-line flags and the environment share one parser.
void register_options(CLI::App& app, RunConfig& cfg);

ThermalFieldConfig field_config(const RunConfig& cfg);
DetectorProfile detector_profile(const ProfileKeys& keys);
SweepSpec sweep_spec(const ProfileKeys& keys, const RunConfig& cfg);
std::vector<double> separation_grid(const GridKeys& grid);
std::vector<double> temperature_grid(const GridKeys& grid);
std::vector<double> window_widths(const RunConfig& cfg);
std::vector<double> tc_widths(const RunConfig& cfg);
ProbeCoupling probe_coupling(const ExtractKeys& keys, const RunConfig& cfg);

/// Throws InvalidInput for the first invalid key of `command`.
void validate(const RunConfig& cfg, const std::string& command);

/// Resolved keys of `command` plus the field constants and seed, one
/// "section.key = value" per line. Thread count and output paths are left
/// out so that they do not change the hash.
std::string canonical_form(const RunConfig& cfg, const std::string& command);

/// FNV-1a 64-bit hash of canonical_form, as 16 hex digits.
std::string config_hash(const RunConfig& cfg, const std::string& command);

}  // namespace spatent::cli
