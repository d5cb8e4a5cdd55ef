// Copyright 2026 The spatent Authors
// SPDX-License-Identifier: Apache-2.0

#include "spatent/sampling.hpp"

#include <cmath>
#include <numbers>

#include "spatent/error.hpp"

namespace spatent {

namespace {

struct Mat2 {
  double a, b, c, d;  // [[a, b], [c, d]]

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  Mat2 transposed() const { return {a, c, b, d}; }
};

Mat2 rotation(double t) {
  return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
}

}  // namespace

SampledCovariance random_physical_cm(std::mt19937_64& rng,
                                     const RandomCmOptions& opts) {
  std::uniform_real_distribution<double> thermal(1.0, opts.max_thermal);
  std::uniform_real_distribution<double> squeeze(-opts.max_squeeze,
                                                 opts.max_squeeze);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  const double n1 = thermal(rng);
  const double n2 = thermal(rng);
  const double r1 = squeeze(rng);
  const double r2 = squeeze(rng);
  const Mat2 rot_a = rotation(angle(rng));
  const Mat2 rot_b = rotation(angle(rng));

  const Mat2 m = rot_a * Mat2{std::exp(r1), 0.0, 0.0, std::exp(r2)} * rot_b;
  const Mat2 m_inv_t =
      rot_a * Mat2{std::exp(-r1), 0.0, 0.0, std::exp(-r2)} * rot_b;
  const Mat2 n{n1, 0.0, 0.0, n2};

  const Mat2 pos = m * n * m.transposed();
  const Mat2 mom = m_inv_t * n * m_inv_t.transposed();

  SampledCovariance out;
  out.cm = {pos.a, mom.a, pos.d, mom.d, 0.5 * (pos.b + pos.c),
            0.5 * (mom.b + mom.c)};
  out.nu_plus = std::max(n1, n2);
  out.nu_minus = std::min(n1, n2);
  return out;
}

MomentEstimate sample_fourth_moment(const CovarianceMatrix4& cm,
                                    std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw InvalidInput("need at least two samples");
  const double srr = 0.5 * cm.a_uu;
  const double sqq = 0.5 * cm.b_uu;
  const double srq = 0.5 * cm.c_uu;
  if (!(srr > 0.0) || !(srr * sqq - srq * srq >= 0.0)) {
    throw InvalidInput("position block is not positive semidefinite");
  }
  const double l11 = std::sqrt(srr);
  const double l21 = srq / l11;
  const double l22 = std::sqrt(std::max(0.0, sqq - l21 * l21));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double z1 = normal(rng);
    const double z2 = normal(rng);
    const double ur = l11 * z1;
    const double uq = l21 * z1 + l22 * z2;
    const double v = ur * ur * uq * uq;
    const double d = v - mean;
    mean += d / static_cast<double>(i + 1);
    m2 += d * (v - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(samples)), samples};
}

}  // namespace spatent
