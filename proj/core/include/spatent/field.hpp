// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace spatent {

/// Free Bose gas in a 1D infinite square well [0, L] held in a grand-canonical
/// thermal state. The defaults (hbar = k_B = 1, m = 1/2, L = 1) give
/// E_l = pi^2 l^2.
struct ThermalFieldConfig {
  double box_length = 1.0;
  double mass = 0.5;
  double hbar = 1.0;
  double boltzmann = 1.0;
  double temperature = 0.0;         ///< energy units; 0 is the ground state
  double chemical_potential = 0.0;  ///< must stay below the lowest level

  ThermalFieldConfig at_temperature(double t) const {
    ThermalFieldConfig out = *this;
    out.temperature = t;
    return out;
  }

  /// Energy of level l (no validation).
  double level_energy(int l) const;
};

/// Throws InvalidInput unless L, m, hbar, k_B > 0, T >= 0 and
/// mu < E_1, all finite.
void validate(const ThermalFieldConfig& cfg);

/// Standing wave sqrt(2/L) sin(k_l x), k_l = pi l / L.
struct FieldMode {
  int index = 1;
  double wavenumber = 0.0;
  double energy = 0.0;
  double box_length = 1.0;
};

/// Throws InvalidInput for l < 1.
FieldMode field_mode(int l, const ThermalFieldConfig& cfg);

/// Throws DomainError for x outside [0, L].
double mode_function(const FieldMode& mode, double x);

/// coth((E_l - mu) / (2 k_B T)), exactly 1 at T = 0.
/// Throws InvalidInput if mu >= E_l.
double thermal_factor(const FieldMode& mode, const ThermalFieldConfig& cfg);

/// Dimensionless weights of mode l in the position and momentum variances:
/// hbar/(2 m omega_l) and hbar m omega_l / 2 measured in units of the box,
/// which reduce to (k_l L)^-2 and (k_l L)^2 in any unit system.
double position_weight(int l);
double momentum_weight(int l);

}  // namespace spatent
