// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/field.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "spatent/error.hpp"

namespace spatent {

double ThermalFieldConfig::level_energy(int l) const {
  const double k = std::numbers::pi * l / box_length;
  return hbar * hbar * k * k / (2.0 * mass);
}

void validate(const ThermalFieldConfig& cfg) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(cfg.box_length)) throw InvalidInput("box_length must be > 0");
  if (!positive(cfg.mass)) throw InvalidInput("mass must be > 0");
  if (!positive(cfg.hbar)) throw InvalidInput("hbar must be > 0");
  if (!positive(cfg.boltzmann)) throw InvalidInput("boltzmann must be > 0");
  if (!std::isfinite(cfg.temperature) || cfg.temperature < 0.0) {
    throw InvalidInput("temperature must be finite and >= 0");
  }
  if (!std::isfinite(cfg.chemical_potential)) {
    throw InvalidInput("chemical_potential must be finite");
  }
  const double e1 = cfg.level_energy(1);
  if (cfg.chemical_potential >= e1) {
    throw InvalidInput(fmt::format(
        "chemical_potential {:.6g} must be below the lowest level E_1 = {:.6g}",
        cfg.chemical_potential, e1));
  }
}

FieldMode field_mode(int l, const ThermalFieldConfig& cfg) {
  if (l < 1) throw InvalidInput(fmt::format("mode index {} < 1", l));
  return {l, std::numbers::pi * l / cfg.box_length, cfg.level_energy(l),
          cfg.box_length};
}

double mode_function(const FieldMode& mode, double x) {
  if (!(x >= 0.0 && x <= mode.box_length)) {
    throw DomainError(
        fmt::format("x = {} outside the box [0, {}]", x, mode.box_length));
  }
  return std::sqrt(2.0 / mode.box_length) * std::sin(mode.wavenumber * x);
}

double thermal_factor(const FieldMode& mode, const ThermalFieldConfig& cfg) {
  const double gap = mode.energy - cfg.chemical_potential;
  if (!(gap > 0.0)) {
    throw InvalidInput(fmt::format(
        "chemical_potential {:.6g} >= E_{} = {:.6g}", cfg.chemical_potential,
        mode.index, mode.energy));
  }
  if (cfg.temperature == 0.0) return 1.0;
  return 1.0 / std::tanh(gap / (2.0 * cfg.boltzmann * cfg.temperature));
}

double position_weight(int l) {
  const double kl = std::numbers::pi * l;
  return 1.0 / (kl * kl);
}

double momentum_weight(int l) {
  const double kl = std::numbers::pi * l;
  return kl * kl;
}

}  // namespace spatent
