// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/extraction.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fmt/format.h>

#include "spatent/error.hpp"

namespace spatent {

void validate(const ProbeCoupling& coupling) {
  if (!(coupling.gamma_eff > 0.0 && coupling.gamma_eff < 0.1)) {
    throw InvalidInput(fmt::format(
        "gamma_eff = {} outside the perturbative range (0, 0.1)",
        coupling.gamma_eff));
  }
  if (!(coupling.probe_mass > 0.0 && coupling.probe_frequency > 0.0 &&
        coupling.hbar > 0.0) ||
      !std::isfinite(coupling.kappa())) {
    throw InvalidInput("probe mass, frequency and hbar must be > 0");
  }
}

ProbePairState make_probe_state(double x, double y, double z, double delta) {
  if (!(x >= 0.0 && z >= 0.0 && delta >= 0.0) || !std::isfinite(y)) {
    throw InvalidInput("probe state needs x, z, delta >= 0");
  }
  if (y * y > x * z * (1.0 + 1e-12)) {
    throw InvalidInput(
        fmt::format("probe coherence y^2 = {:.6g} exceeds xz = {:.6g}", y * y,
                    x * z));
  }
  ProbePairState s{x, y, z, delta, false, 0.0};
  s.condition_margin = std::abs(y) - extraction_threshold(delta);
  s.entangled = extraction_test(s);
  return s;
}

double gaussian_fourth_moment(const CovarianceMatrix4& cm) {
  const double rr = 0.5 * cm.a_uu;
  const double qq = 0.5 * cm.b_uu;
  const double rq = 0.5 * cm.c_uu;
  return rr * qq + 2.0 * rq * rq;
}

ProbePairState probe_state(const CovarianceMatrix4& cm,
                           const ProbeCoupling& coupling) {
  validate(coupling);
  if (!is_physical(cm)) {
    throw UnphysicalState("probe extraction needs a physical field state");
  }
  const double kappa = coupling.kappa();
  const double g2 = coupling.gamma_eff * coupling.gamma_eff;
  return make_probe_state(kappa * 0.5 * cm.a_uu, kappa * 0.5 * cm.c_uu,
                          kappa * 0.5 * cm.b_uu,
                          g2 * g2 * gaussian_fourth_moment(cm));
}

double extraction_threshold(double delta) {
  return 0.5 * std::sqrt(delta * (delta + 1.0));
}

bool extraction_test(const ProbePairState& state) {
  return std::abs(state.y) > extraction_threshold(state.delta);
}

double ppt_probe_oracle(const ProbePairState& state) {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  rho(0, 0) = 1.0;
  rho(1, 1) = state.x;
  rho(1, 2) = rho(2, 1) = state.y;
  rho(2, 2) = state.z;
  rho(3, 3) = state.delta;

  // Transpose the second qubit: <i j| rho^T_B |k l> = <i l| rho |k j>.
  Eigen::Matrix4d pt;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          pt(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(
      pt, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigen solver failed on the probe state");
  }
  return solver.eigenvalues().minCoeff();
}

bool in_threshold_band(const ProbePairState& state, double relative) {
  const double lo = extraction_threshold(state.delta) * (1.0 - relative);
  const double hi = std::sqrt(state.delta) * (1.0 + relative);
  const double ay = std::abs(state.y);
  return ay >= lo && ay <= hi;
}

std::vector<ExtractionPoint> extraction_scan(const SweepResult& sweep,
                                             const ProbeCoupling& coupling) {
  validate(coupling);
  std::vector<ExtractionPoint> out;
  out.reserve(sweep.points.size());
  for (const auto& pt : sweep.points) {
    ExtractionPoint ep;
    ep.separation = pt.separation;
    ep.temperature = pt.temperature;
    ep.flags = pt.flags;
    if (!pt.has_verdict || !pt.verdict.valid()) {
      ep.error = pt.error.empty() ? "no physical field state" : pt.error;
      out.push_back(std::move(ep));
      continue;
    }
    try {
      ep.state = probe_state(pt.cm, coupling);
      ep.has_state = true;
      ep.threshold = extraction_threshold(ep.state.delta);
      ep.oracle_min_eigenvalue = ppt_probe_oracle(ep.state);
      ep.in_band = in_threshold_band(ep.state);
      ep.log_negativity = pt.verdict.log_negativity;
      ep.cross_position = pt.cm.c_uu;
    } catch (const Error& e) {
      ep.error = e.what();
    }
    out.push_back(std::move(ep));
  }
  return out;
}

}  // namespace spatent
