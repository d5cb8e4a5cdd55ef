// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spatent/analysis.hpp"
#include "spatent/extraction.hpp"
#include "spatent/spatial_modes.hpp"

namespace spatent {

/// Shortest text with 17 significant digits; "nan", "inf", "-inf" otherwise.
std::string format_real(double value);

/// Lines written as "# key: value" ahead of the column header.
using Metadata = std::vector<std::pair<std::string, std::string>>;

void write_metadata(std::ostream& os, const Metadata& meta);

inline constexpr std::array<std::string_view, 19> kSweepColumns = {
    "separation",   "temperature", "verdict",          "log_negativity",
    "nu_minus",     "nu_minus_pt", "purity",           "purity_threshold",
    "criterion_det", "criterion_swapped", "A", "B", "C", "D", "E", "F",
    "raw_residual", "residual",    "flags"};

inline constexpr std::array<std::string_view, 8> kWindowColumns = {
    "region_width",      "temperature", "min_modes", "max_modes",
    "entangled_windows", "open_window", "residual",  "pattern"};

inline constexpr std::array<std::string_view, 7> kTcColumns = {
    "route", "region_width", "tc", "lower", "upper", "status", "evaluations"};

inline constexpr std::array<std::string_view, 15> kExtractionColumns = {
    "separation",    "temperature",   "x",
    "y",             "z",             "delta",
    "threshold",     "extraction",    "oracle_min_eigenvalue",
    "oracle",        "in_band",       "log_negativity",
    "E",             "flags",         "error"};

/// One row per point in grid order. Points without a CM leave the numeric
/// columns empty and carry the reason in flags.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep,
                     const Metadata& meta);

/// pattern holds one character per window: 'E' entangled, '.' separable,
/// 'x' physicality violated.
void write_window_csv(std::ostream& os, std::span<const MomentumWindow> scans,
                      const Metadata& meta);

void write_tc_csv(std::ostream& os, const CriticalTemperatureCurve& curve,
                  const Metadata& meta);

void write_extraction_csv(std::ostream& os,
                          std::span<const ExtractionPoint> points,
                          const Metadata& meta);

std::string mode_vector_to_json(const ModeVector& mv);

/// Throws InvalidInput on malformed input or a coefficient count that does
/// not match l_max.
ModeVector mode_vector_from_json(std::string_view text);

}  // namespace spatent
