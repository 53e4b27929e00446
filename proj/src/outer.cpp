// src/outer.cpp

// Copyright 2026  The szego authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "szego/outer.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"
#include "szego/config.hpp"
#include "szego/errors.hpp"

namespace szego {

double geometric_mean(const GridFunction& f) {
  if (f.max_relative_imag() > Tolerances::real_density)
    throw InvalidArgument("density not real");
  double acc = 0.0;
  bool has_zero = false;
  for (const cd& s : f.samples()) {
    if (s.real() < 0.0) throw InvalidArgument("density not nonnegative");
    if (s.real() == 0.0) {
      has_zero = true;
      continue;
    }
    acc += std::log(s.real());
  }
  if (has_zero) return 0.0;
  const double mean_log = acc / static_cast<double>(f.size());
  if (mean_log < Tolerances::gm_log_floor) return 0.0;
  return std::exp(mean_log);
}

OuterFactor::OuterFactor(FourierCoeffs coeffs, double gm, GridFunction grid, double dropped_max)
    : coeffs_(std::move(coeffs)), gm_(gm), grid_(std::move(grid)), dropped_max_(dropped_max) {
  if (coeffs_.dim() != 1 || grid_.dim() != 1)
    throw InvalidArgument("outer factors live on the 1-D circle");
  for (const auto& [k, v] : coeffs_.entries())
    if (k[0] < 0) throw InvalidArgument("outer factor has a negative-index coefficient");
}

OuterFactor OuterFactor::zero(const std::vector<int>& dims) {
  return OuterFactor(FourierCoeffs::from_1d({0.0}), 0.0, GridFunction::constant(dims, 0.0), 0.0);
}

OuterFactor OuterFactor::from_polynomial(const FourierCoeffs& coeffs, int grid) {
  if (coeffs.dim() != 1) throw InvalidArgument("outer polynomial must be 1-D");
  for (const auto& [k, v] : coeffs.entries())
    if (k[0] < 0) throw InvalidArgument("outer polynomial must be analytic (k >= 0)");
  GridFunction values = synthesize(coeffs, {grid});
  const double gm = geometric_mean(values.transformed([](cd z) { return cd(std::norm(z)); }));
  const double c0 = std::norm(coeffs.at(0));
  // Jensen: GM(|P|^2) = |P(0)|^2 exactly when P has no zeros in the open disc.
  if (!(c0 > 0.0) || std::abs(gm - c0) > 1e-9 * std::max(1.0, gm))
    throw InvalidArgument("polynomial has zeros in the unit disc; not an outer function");
  FourierCoeffs table(1);
  for (int k = 0; k <= coeffs.window()[0]; ++k) table.set({k, 0, 0}, coeffs.at(k));
  return OuterFactor(std::move(table), gm, std::move(values), 0.0);
}

OuterFactor outer_factor(const GridFunction& f, int window) {
  if (f.dim() != 1) throw InvalidArgument("outer_factor needs a 1-D density");
  const int n = f.dims()[0];
  if (window < 0) window = n / 4;
  if (window > n / 2 - 1) throw AliasingError("outer factor window beyond Nyquist");

  if (f.max_relative_imag() > Tolerances::real_density) throw InvalidArgument("density not real");
  for (const cd& s : f.samples())
    if (!(s.real() > 0.0)) return OuterFactor::zero(f.dims());
  const double gm = geometric_mean(f);
  if (gm == 0.0) return OuterFactor::zero(f.dims());

  std::vector<cd> logs(f.size());
  for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = std::log(f[i].real());
  std::vector<cd> spec = detail::dft(logs, f.dims(), -1);
  const double scale = 1.0 / static_cast<double>(n);

  // analytic half: g^(0)/2 + sum_{0<k<N/2} g^(k) e_k, Nyquist bin split evenly
  std::vector<cd> half(spec.size(), 0.0);
  half[0] = 0.5 * spec[0] * scale;
  for (int k = 1; k < n / 2; ++k) half[static_cast<std::size_t>(k)] = spec[static_cast<std::size_t>(k)] * scale;
  half[static_cast<std::size_t>(n / 2)] = 0.5 * spec[static_cast<std::size_t>(n / 2)] * scale;

  std::vector<cd> boundary = detail::dft(half, f.dims(), +1);
  for (cd& z : boundary) z = std::exp(z);
  GridFunction grid(f.dims(), boundary);

  std::vector<cd> phi_spec = detail::dft(boundary, f.dims(), -1);
  FourierCoeffs coeffs(1);
  double dropped = 0.0;
  for (int b = 0; b < n; ++b) {
    const cd v = phi_spec[static_cast<std::size_t>(b)] * scale;
    if (b <= window)
      coeffs.set({b, 0, 0}, v);
    else
      dropped = std::max(dropped, std::abs(v));
  }
  return OuterFactor(std::move(coeffs), gm, std::move(grid), dropped);
}

cd eval_Phi(const OuterFactor& factor, cd z) {
  if (std::abs(z) >= 1.0) throw InvalidArgument("outside open disc");
  cd acc = 0.0;
  for (int k = factor.window(); k >= 0; --k) acc = acc * z + factor.coeffs().at(k);
  return acc;
}

}  // namespace szego
