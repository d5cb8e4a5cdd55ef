// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>
#include <spatent/parallel.hpp>
#include <spatent/report_io.hpp>
#include <spatent/version.hpp>

#include "app.hpp"
#include "selftest.hpp"

namespace spatent::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json real(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

Metadata metadata(const Context& ctx) {
  const auto& f = ctx.cfg.field;
  return {
      {"tool", "spatent"},
      {"version", std::string(kVersion)},
      {"command", ctx.command},
      {"config_hash", config_hash(ctx.cfg, ctx.command)},
      {"units",
       fmt::format("hbar={} k_B={} L={} m={} mu={}; lengths in L, "
                   "temperatures in energy/k_B",
                   format_real(f.hbar), format_real(f.boltzmann),
                   format_real(f.box_length), format_real(f.mass),
                   format_real(f.chemical_potential))},
      {"seed", std::to_string(ctx.cfg.seed)},
  };
}

json metadata_json(const Metadata& meta) {
  json j = json::object();
  for (const auto& [k, v] : meta) j[k] = v;
  return j;
}

fs::path prepare_out_dir(const Context& ctx) {
  const fs::path dir(ctx.cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw IoError(fmt::format("cannot create output directory {}: {}",
                              dir.string(), ec ? ec.message() : "not a "
                                                                "directory"));
  }
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError(fmt::format("cannot open {} for writing", path.string()));
  os << content;
  os.flush();
  if (!os) throw IoError(fmt::format("write to {} failed", path.string()));
}

template <typename Writer>
fs::path emit_csv(const Context& ctx, const std::string& name, Writer&& w) {
  const fs::path path = prepare_out_dir(ctx) / name;
  std::ostringstream os;
  w(os);
  write_file(path, os.str());
  ctx.out << "wrote " << path.string() << '\n';
  return path;
}

void emit_json(const Context& ctx, const std::string& name, const json& j) {
  const fs::path path = prepare_out_dir(ctx) / name;
  write_file(path, j.dump(2) + "\n");
  ctx.out << "wrote " << path.string() << '\n';
}

json cm_json(const CovarianceMatrix4& cm) {
  return {{"A", real(cm.a_uu)}, {"B", real(cm.a_pp)}, {"C", real(cm.b_uu)},
          {"D", real(cm.b_pp)}, {"E", real(cm.c_uu)}, {"F", real(cm.c_pp)}};
}

json point_json(const SweepPoint& p) {
  json j;
  j["separation"] = real(p.separation);
  j["temperature"] = real(p.temperature);
  if (p.has_verdict) {
    const auto& v = p.verdict;
    j["verdict"] = std::string(to_string(v.verdict));
    j["log_negativity"] = real(v.log_negativity);
    j["nu_minus"] = real(v.nu_minus);
    j["nu_minus_pt"] = real(v.nu_minus_pt);
    j["criterion_det"] = real(v.criterion_det);
    j["criterion_swapped"] = real(v.criterion_swapped);
    j["purity"] = real(p.purity);
  } else {
    j["verdict"] = nullptr;
  }
  j["cm"] = p.has_cm ? cm_json(p.cm) : json(nullptr);
  j["purity_threshold"] = real(p.purity_threshold);
  j["raw_residual"] = real(p.raw_residual);
  j["residual"] = real(p.residual);
  j["flags"] = flags_to_string(p.flags);
  if (!p.error.empty()) j["error"] = p.error;
  return j;
}

SweepSpec grid_spec(const ProfileKeys& profile, const GridKeys& grid,
                    const RunConfig& cfg) {
  SweepSpec spec = sweep_spec(profile, cfg);
  spec.separations = separation_grid(grid);
  spec.temperatures = temperature_grid(grid);
  return spec;
}

}  // namespace

int cmd_verdict(const Context& ctx) {
  const auto& v = ctx.cfg.verdict;
  const auto field = field_config(ctx.cfg);
  const SweepSpec spec = sweep_spec(v.profile, ctx.cfg);

  Region r, q;
  if (v.r_right > 0.0) {
    r = make_region(v.r_left, v.r_right, field);
    q = make_region(v.q_left, v.q_right, field);
  } else {
    std::tie(r, q) = place_pair(v.profile.width, v.separation, field,
                                spec.center);
  }
  const SweepPoint pt = evaluate_pair(r, q, v.temperature, spec, field);

  if (v.format == "json") {
    json j;
    j["metadata"] = metadata_json(metadata(ctx));
    j["regions"] = {{"R", {real(r.left), real(r.right)}},
                    {"Q", {real(q.left), real(q.right)}}};
    j["profile"] = v.profile.profile;
    j["point"] = point_json(pt);
    ctx.out << j.dump(2) << '\n';
  } else {
    auto line = [&](std::string_view key, const std::string& value) {
      ctx.out << fmt::format("{:<18} {}\n", key, value);
    };
    line("regions", fmt::format("R = [{}, {}]  Q = [{}, {}]",
                                format_real(r.left), format_real(r.right),
                                format_real(q.left), format_real(q.right)));
    line("profile", v.profile.profile);
    line("temperature", format_real(v.temperature));
    if (pt.has_cm) {
      line("A", format_real(pt.cm.a_uu));
      line("B", format_real(pt.cm.a_pp));
      line("C", format_real(pt.cm.b_uu));
      line("D", format_real(pt.cm.b_pp));
      line("E", format_real(pt.cm.c_uu));
      line("F", format_real(pt.cm.c_pp));
    }
    if (pt.has_verdict) {
      const auto& sv = pt.verdict;
      line("nu_minus", format_real(sv.nu_minus));
      line("nu_minus_pt", format_real(sv.nu_minus_pt));
      line("criterion_det", format_real(sv.criterion_det));
      line("criterion_swapped", format_real(sv.criterion_swapped));
      line("log_negativity", format_real(sv.log_negativity));
      line("purity", format_real(pt.purity));
      line("purity_threshold", format_real(pt.purity_threshold));
    }
    line("residual", format_real(pt.residual));
    line("flags", flags_to_string(pt.flags));
    line("verdict",
         pt.has_verdict ? std::string(to_string(pt.verdict.verdict)) : "none");
  }

  if (!pt.has_verdict) {
    ctx.err << "error: " << pt.error << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_sweep(const Context& ctx) {
  const auto field = field_config(ctx.cfg);
  const SweepSpec spec =
      grid_spec(ctx.cfg.sweep.profile, ctx.cfg.sweep.grid, ctx.cfg);
  const SweepResult result = run_sweep(spec, field);
  const Metadata meta = metadata(ctx);

  emit_csv(ctx, "sweep.csv",
           [&](std::ostream& os) { write_sweep_csv(os, result, meta); });
  json j;
  j["metadata"] = metadata_json(meta);
  j["columns"] = kSweepColumns;
  j["points"] = json::array();
  int entangled = 0;
  int flagged = 0;
  for (const auto& p : result.points) {
    j["points"].push_back(point_json(p));
    if (p.has_verdict && p.verdict.verdict == Verdict::entangled) ++entangled;
    if (!p.has_verdict) ++flagged;
  }
  j["summary"] = {{"points", result.points.size()},
                  {"entangled", entangled},
                  {"without_verdict", flagged}};
  emit_json(ctx, "sweep.json", j);
  ctx.out << fmt::format("{} points, {} entangled, {} without verdict\n",
                         result.points.size(), entangled, flagged);
  return kExitOk;
}

int cmd_window(const Context& ctx) {
  const auto& w = ctx.cfg.window;
  const auto field = field_config(ctx.cfg);
  WindowScanOptions opts;
  opts.l_min = w.l_min;
  opts.window_cap = w.window_cap;
  opts.profile_order = w.profile_order;
  opts.residual_gate = w.residual_gate;
  opts.tolerance = w.tolerance;

  const auto widths = window_widths(ctx.cfg);
  const auto& temps = w.temperatures;
  std::vector<MomentumWindow> scans(widths.size() * temps.size());
  parallel_for(widths.size(), ctx.cfg.threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < temps.size(); ++j) {
      scans[i * temps.size() + j] =
          momentum_window_scan(widths[i], field, temps[j], opts);
    }
  });

  const Metadata meta = metadata(ctx);
  emit_csv(ctx, "window.csv",
           [&](std::ostream& os) { write_window_csv(os, scans, meta); });
  json j;
  j["metadata"] = metadata_json(meta);
  j["scans"] = json::array();
  for (const auto& s : scans) {
    json row;
    row["region_width"] = real(s.region_width);
    row["temperature"] = real(s.temperature);
    row["min_modes"] = s.min_modes ? json(*s.min_modes) : json(nullptr);
    row["max_modes"] = s.max_modes ? json(*s.max_modes) : json(nullptr);
    row["min_modes_times_width"] =
        s.min_modes ? real(*s.min_modes * s.region_width) : json(nullptr);
    row["entangled_windows"] = s.entangled_windows;
    row["open_window"] = s.open_window;
    row["residual"] = real(s.residual);
    j["scans"].push_back(row);
    ctx.out << fmt::format(
        "width {:<10} T {:<10} dk_min {:>6} dk_min*width {}\n",
        format_real(s.region_width), format_real(s.temperature),
        s.min_modes ? std::to_string(*s.min_modes) : "-",
        s.min_modes ? format_real(*s.min_modes * s.region_width) : "-");
  }
  emit_json(ctx, "window.json", j);
  return kExitOk;
}

int cmd_tc(const Context& ctx) {
  const auto& t = ctx.cfg.tc;
  const auto field = field_config(ctx.cfg);
  TcOptions opts;
  opts.relative_width = t.relative_width;
  opts.initial_upper = t.initial_upper;
  opts.ceiling = t.ceiling;
  opts.monotonicity_probes = t.monotonicity_probes;
  opts.window.l_min = t.l_min;
  opts.window.window_cap = t.window_cap;
  opts.window.residual_gate = t.residual_gate;
  opts.window.tolerance = t.tolerance;
  opts.gaussian_profile.kind = ProfileKind::gaussian_modulated;
  opts.gaussian_profile.modulation_width = t.modulation_width;
  opts.gaussian_profile.inverse_wavenumber = t.inverse_k;
  opts.residual_gate = t.residual_gate;
  opts.tolerance = t.tolerance;
  if (t.profile_order > 0) {
    opts.window.profile_order = t.profile_order;
    opts.profile_order = t.profile_order;
  }

  std::vector<TcRoute> routes;
  if (t.route == "both") {
    routes = {TcRoute::truncated_top_hat, TcRoute::gaussian_modulated};
  } else {
    routes = {tc_route_from_string(t.route)};
  }
  const auto widths = tc_widths(ctx.cfg);
  const Metadata meta = metadata(ctx);

  std::vector<CriticalTemperatureCurve> curves;
  for (TcRoute route : routes) {
    curves.push_back(
        critical_temperature_curve(widths, field, route, opts, ctx.cfg.threads));
  }

  emit_csv(ctx, "tc.csv", [&](std::ostream& os) {
    write_metadata(os, meta);
    for (std::size_t c = 0; c < curves.size(); ++c) {
      std::ostringstream body;
      write_tc_csv(body, curves[c], {});
      std::string text = body.str();
      if (c > 0) text = text.substr(text.find('\n') + 1);  // one header
      os << text;
    }
  });

  json j;
  j["metadata"] = metadata_json(meta);
  j["curves"] = json::array();
  for (const auto& curve : curves) {
    json jc;
    jc["route"] = std::string(to_string(curve.route));
    jc["points"] = json::array();
    std::vector<std::pair<double, double>> found;
    for (std::size_t i = 0; i < curve.widths.size(); ++i) {
      const auto& ct = curve.temperatures[i];
      jc["points"].push_back({{"region_width", real(curve.widths[i])},
                              {"tc", real(ct.value)},
                              {"lower", real(ct.lower)},
                              {"upper", real(ct.upper)},
                              {"status", std::string(to_string(ct.status))},
                              {"evaluations", ct.evaluations}});
      if (ct.status == TcStatus::found) {
        found.emplace_back(curve.widths[i], ct.value);
      }
    }
    std::sort(found.begin(), found.end());
    bool decreasing = true;
    for (std::size_t i = 1; i < found.size(); ++i) {
      if (!(found[i].second < found[i - 1].second)) decreasing = false;
    }
    if (curve.fit) {
      jc["fit"] = {{"exponent", real(curve.fit->exponent)},
                   {"amplitude", real(curve.fit->amplitude)},
                   {"rms_residual", real(curve.fit->rms_residual)}};
      ctx.out << fmt::format("{}: T_C ~ width^{}\n", to_string(curve.route),
                             format_real(curve.fit->exponent));
    } else {
      jc["fit"] = nullptr;
      ctx.out << fmt::format("{}: fewer than 3 finite T_C values, no fit\n",
                             to_string(curve.route));
    }
    jc["monotone_decreasing"] = decreasing;
    j["curves"].push_back(jc);
  }
  emit_json(ctx, "tc.json", j);
  return kExitOk;
}

int cmd_extract(const Context& ctx) {
  const auto& e = ctx.cfg.extract;
  const auto field = field_config(ctx.cfg);
  const SweepSpec spec = grid_spec(e.profile, e.grid, ctx.cfg);
  const SweepResult sweep = run_sweep(spec, field);
  const ProbeCoupling coupling = probe_coupling(e, ctx.cfg);
  const auto points = extraction_scan(sweep, coupling);
  const Metadata meta = metadata(ctx);

  emit_csv(ctx, "extract.csv",
           [&](std::ostream& os) { write_extraction_csv(os, points, meta); });

  // Rows: field verdict; columns: probe verdict.
  int table[2][2] = {{0, 0}, {0, 0}};
  int missed_strong = 0;
  int fired_uncorrelated = 0;
  int band = 0;
  int oracle_disagree = 0;
  for (const auto& p : points) {
    if (!p.has_state) continue;
    const bool field_ent = p.log_negativity > 0.0;
    table[field_ent][p.state.entangled] += 1;
    if (p.log_negativity > 0.01 && !p.state.entangled) ++missed_strong;
    if (p.cross_position == 0.0 && p.state.entangled) ++fired_uncorrelated;
    if (p.in_band) ++band;
    if (!p.in_band && ((p.oracle_min_eigenvalue < 0.0) != p.state.entangled)) {
      ++oracle_disagree;
    }
  }
  json j;
  j["metadata"] = metadata_json(meta);
  j["coupling"] = {{"gamma_eff", real(coupling.gamma_eff)},
                   {"probe_mass", real(coupling.probe_mass)},
                   {"probe_frequency", real(coupling.probe_frequency)},
                   {"kappa", real(coupling.kappa())}};
  j["correspondence"] = {
      {"field_separable_probe_separable", table[0][0]},
      {"field_separable_probe_entangled", table[0][1]},
      {"field_entangled_probe_separable", table[1][0]},
      {"field_entangled_probe_entangled", table[1][1]},
  };
  j["checks"] = {{"probe_separable_where_log_negativity_above_0.01",
                  missed_strong},
                 {"probe_entangled_where_E_is_zero", fired_uncorrelated},
                 {"points_in_threshold_band", band},
                 {"oracle_disagreements_outside_band", oracle_disagree}};
  emit_json(ctx, "extract.json", j);

  ctx.out << fmt::format(
      "field \\ probe     separable  entangled\n"
      "separable        {:>9}  {:>9}\n"
      "entangled        {:>9}  {:>9}\n",
      table[0][0], table[0][1], table[1][0], table[1][1]);
  ctx.out << fmt::format(
      "missed (E_N > 0.01): {}  fired with E = 0: {}  oracle disagreements: "
      "{}\n",
      missed_strong, fired_uncorrelated, oracle_disagree);
  return kExitOk;
}

int cmd_selftest(const Context& ctx) {
  const auto results = run_selftest(ctx.cfg);
  const CheckResult* first_failure = nullptr;
  for (const auto& r : results) {
    ctx.out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
            << '\n';
    if (!r.passed && !first_failure) first_failure = &r;
  }
  if (first_failure) {
    ctx.err << "selftest failed: " << first_failure->name << '\n';
    return kExitNumerical;
  }
  ctx.out << "all " << results.size() << " checks passed\n";
  return kExitOk;
}

}  // namespace spatent::cli
