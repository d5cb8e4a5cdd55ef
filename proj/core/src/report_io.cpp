// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/report_io.hpp"

#include <cmath>
#include <fmt/format.h>
#include "json.hpp"
#include <ostream>

#include "spatent/error.hpp"

namespace spatent {

namespace {

template <std::size_t N>
void write_header(std::ostream& os,
                  const std::array<std::string_view, N>& columns) {
  for (std::size_t i = 0; i < N; ++i) {
    if (i) os << ',';
    os << columns[i];
  }
  os << '\n';
}

std::string opt_int(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

char window_char(Verdict v) {
  switch (v) {
    case Verdict::entangled:
      return 'E';
    case Verdict::separable:
      return '.';
    case Verdict::physicality_violated:
      return 'x';
  }
  return '?';
}

// Messages may contain commas; keep the CSV flat.
std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  }
  return s;
}

}  // namespace

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", value);
}

void write_metadata(std::ostream& os, const Metadata& meta) {
  for (const auto& [key, value] : meta) {
    os << "# " << key << ": " << value << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep,
                     const Metadata& meta) {
  write_metadata(os, meta);
  write_header(os, kSweepColumns);
  for (const auto& p : sweep.points) {
    os << format_real(p.separation) << ',' << format_real(p.temperature)
       << ',';
    if (p.has_verdict) {
      const auto& v = p.verdict;
      os << to_string(v.verdict) << ',' << format_real(v.log_negativity)
         << ',' << format_real(v.nu_minus) << ',' << format_real(v.nu_minus_pt)
         << ',' << format_real(p.purity) << ','
         << format_real(p.purity_threshold) << ','
         << format_real(v.criterion_det) << ','
         << format_real(v.criterion_swapped) << ',';
    } else {
      os << "None,,,,,,,,";
    }
    if (p.has_cm) {
      const auto& c = p.cm;
      os << format_real(c.a_uu) << ',' << format_real(c.a_pp) << ','
         << format_real(c.b_uu) << ',' << format_real(c.b_pp) << ','
         << format_real(c.c_uu) << ',' << format_real(c.c_pp) << ',';
    } else {
      os << ",,,,,,";
    }
    os << format_real(p.raw_residual) << ',' << format_real(p.residual) << ','
       << flags_to_string(p.flags) << '\n';
  }
}

void write_window_csv(std::ostream& os, std::span<const MomentumWindow> scans,
                      const Metadata& meta) {
  write_metadata(os, meta);
  write_header(os, kWindowColumns);
  for (const auto& s : scans) {
    std::string pattern;
    pattern.reserve(s.verdicts.size());
    for (Verdict v : s.verdicts) pattern.push_back(window_char(v));
    os << format_real(s.region_width) << ',' << format_real(s.temperature)
       << ',' << opt_int(s.min_modes) << ',' << opt_int(s.max_modes) << ','
       << s.entangled_windows << ',' << (s.open_window ? 1 : 0) << ','
       << format_real(s.residual) << ',' << pattern << '\n';
  }
}

void write_tc_csv(std::ostream& os, const CriticalTemperatureCurve& curve,
                  const Metadata& meta) {
  write_metadata(os, meta);
  write_header(os, kTcColumns);
  for (std::size_t i = 0; i < curve.widths.size(); ++i) {
    const auto& t = curve.temperatures[i];
    os << to_string(curve.route) << ',' << format_real(curve.widths[i]) << ','
       << format_real(t.value) << ',' << format_real(t.lower) << ','
       << format_real(t.upper) << ',' << to_string(t.status) << ','
       << t.evaluations << '\n';
  }
}

void write_extraction_csv(std::ostream& os,
                          std::span<const ExtractionPoint> points,
                          const Metadata& meta) {
  write_metadata(os, meta);
  write_header(os, kExtractionColumns);
  for (const auto& p : points) {
    os << format_real(p.separation) << ',' << format_real(p.temperature)
       << ',';
    if (p.has_state) {
      const auto& s = p.state;
      os << format_real(s.x) << ',' << format_real(s.y) << ','
         << format_real(s.z) << ',' << format_real(s.delta) << ','
         << format_real(p.threshold) << ','
         << (s.entangled ? "Entangled" : "Separable") << ','
         << format_real(p.oracle_min_eigenvalue) << ','
         << (p.oracle_min_eigenvalue < 0.0 ? "Entangled" : "Separable") << ','
         << (p.in_band ? 1 : 0) << ',' << format_real(p.log_negativity) << ','
         << format_real(p.cross_position) << ',';
    } else {
      os << ",,,,,None,,None,,,,";
    }
    os << flags_to_string(p.flags) << ',' << sanitize(p.error) << '\n';
  }
}

std::string mode_vector_to_json(const ModeVector& mv) {
  nlohmann::json j;
  j["region"] = {{"left", mv.region.left}, {"right", mv.region.right}};
  j["profile"] = {{"kind", std::string(to_string(mv.profile.kind))},
                  {"modulation_width", mv.profile.modulation_width},
                  {"inverse_wavenumber", mv.profile.inverse_wavenumber}};
  j["l_min"] = mv.l_min;
  j["l_max"] = mv.l_max;
  j["normalization_constant"] = mv.normalization_constant;
  j["orthogonalized"] = mv.orthogonalized;
  j["coefficients"] = mv.coefficients;
  return j.dump();
}

ModeVector mode_vector_from_json(std::string_view text) {
  ModeVector mv;
  try {
    const auto j = nlohmann::json::parse(text);
    mv.region.left = j.at("region").at("left").get<double>();
    mv.region.right = j.at("region").at("right").get<double>();
    const auto& p = j.at("profile");
    mv.profile.kind =
        profile_kind_from_string(p.at("kind").get<std::string>());
    mv.profile.modulation_width = p.at("modulation_width").get<double>();
    mv.profile.inverse_wavenumber = p.at("inverse_wavenumber").get<bool>();
    mv.l_min = j.at("l_min").get<int>();
    mv.l_max = j.at("l_max").get<int>();
    mv.normalization_constant = j.at("normalization_constant").get<double>();
    mv.orthogonalized = j.at("orthogonalized").get<bool>();
    mv.coefficients = j.at("coefficients").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(fmt::format("malformed mode vector JSON: {}", e.what()));
  }
  if (mv.l_max < 1 || mv.l_min < 1 || mv.l_min > mv.l_max ||
      mv.coefficients.size() != static_cast<std::size_t>(mv.l_max)) {
    throw InvalidInput("mode vector JSON has inconsistent mode range");
  }
  return mv;
}

}  // namespace spatent
