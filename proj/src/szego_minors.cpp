// src/szego_minors.cpp

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

#include "szego/szego_minors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "szego/detkit.hpp"
#include "szego/errors.hpp"
#include "szego/opuc.hpp"

namespace szego {

BorderedSpec BorderedSpec::exponentials(const std::vector<int>& indices) {
  BorderedSpec spec;
  for (int k : indices) spec.f_list.push_back(FourierCoeffs::monomial(1, {k, 0, 0}));
  spec.g_list = spec.f_list;
  return spec;
}

void BorderedSpec::validate() const {
  if (f_list.size() != g_list.size() || f_list.empty())
    throw InvalidArgument("border size mismatch");
  for (const auto* list : {&f_list, &g_list})
    for (const auto& f : *list)
      if (f.dim() != f_list.front().dim())
        throw InvalidArgument("border functions must share one dimension");
}

FourierCoeffs project_H2(const GridFunction& g, int window) {
  if (g.dim() != 1) throw InvalidArgument("H^2 projection is defined on the circle");
  const FourierCoeffs all = analyze(g, uniform_window(1, window));
  FourierCoeffs out(1);
  for (int k = 0; k <= window; ++k) out.set({k, 0, 0}, all.at(k));
  return out;
}

namespace {

// P_{H^2}(f conj(phi)) on phi's grid.
FourierCoeffs projected_border(const FourierCoeffs& f, const OuterFactor& phi) {
  const auto& dims = phi.grid().dims();
  const GridFunction product = synthesize(f, dims) * phi.grid().conj();
  return project_H2(product, dims[0] / 2 - 1);
}

cd l2_inner(const FourierCoeffs& a, const FourierCoeffs& b) {
  cd acc = 0.0;
  for (const auto& [k, v] : a.entries()) acc += v * std::conj(b.at(k));
  return acc;
}

}  // namespace

LimitMinor limit_matrix(const BorderedSpec& spec, const OuterFactor& phi, const OuterFactor& psi) {
  spec.validate();
  if (spec.f_list.front().dim() != 1) throw InvalidArgument("border functions must be 1-D");
  if (phi.grid().dims() != psi.grid().dims())
    throw InvalidArgument("outer factors live on different grids");
  const auto r = static_cast<Eigen::Index>(spec.size());
  LimitMinor out{Eigen::MatrixXcd::Zero(r, r), 0.0, spec};
  if (phi.is_zero() || psi.is_zero()) return out;

  std::vector<FourierCoeffs> big_f, big_g;
  for (const auto& f : spec.f_list) big_f.push_back(projected_border(f, phi));
  for (const auto& g : spec.g_list) big_g.push_back(projected_border(g, psi));
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index k = 0; k < r; ++k)
      out.matrix(j, k) = l2_inner(big_f[static_cast<std::size_t>(j)], big_g[static_cast<std::size_t>(k)]);
  out.value = logdet_lu(out.matrix).value();
  return out;
}

cd twform_entry(const OuterFactor& phi, int j, int k) {
  if (j < 0 || k < 0) throw InvalidArgument("twform indices must be nonnegative");
  if (std::max(j, k) > phi.window()) throw InvalidArgument("insufficient coefficients");
  const FourierCoeffs& c = phi.coeffs();
  cd acc = 0.0;
  for (int l = 0; l <= std::min(j, k); ++l) acc += std::conj(c.at(j - l)) * c.at(k - l);
  return acc;
}

std::pair<cd, cd> genfn_check(const OuterFactor& phi, cd z, cd zeta, int truncation) {
  if (std::abs(z) > 0.8 || std::abs(zeta) > 0.8)
    throw InvalidArgument("radii too large for requested tolerance");
  if (truncation < 0 || truncation > phi.window()) throw InvalidArgument("insufficient coefficients");
  const cd zc = std::conj(zeta);
  cd lhs = 0.0;
  cd zj = 1.0;
  for (int j = 0; j <= truncation; ++j) {
    cd zk = 1.0;
    for (int k = 0; k <= truncation; ++k) {
      lhs += zj * zk * twform_entry(phi, j, k);
      zk *= zc;
    }
    zj *= z;
  }
  const cd rhs = eval_Phi(phi, z) * std::conj(eval_Phi(phi, zeta)) / (1.0 - zc * z);
  return {lhs, rhs};
}

std::array<cd, 3> limit_entry_forms(const FourierCoeffs& f, const FourierCoeffs& g,
                                    const OuterFactor& phi) {
  const auto& dims = phi.grid().dims();
  const FourierCoeffs big_f = projected_border(f, phi);
  const FourierCoeffs big_g = projected_border(g, phi);
  const GridFunction f_grid = synthesize(f, dims);
  const GridFunction g_grid = synthesize(g, dims);
  const GridFunction bf_grid = synthesize(big_f, dims);
  const GridFunction bg_grid = synthesize(big_g, dims);
  const cd second = (bf_grid * g_grid.conj() * phi.grid()).mean();
  const cd third = (f_grid * (bg_grid * phi.grid()).conj()).mean();
  return {l2_inner(big_f, big_g), second, third};
}

namespace {

// Quadratic forms s^H Q s giving the head and total mass of sigma*S.
struct MassForms {
  Eigen::MatrixXcd head;
  Eigen::MatrixXcd total;
};

MassForms mass_forms(const FourierCoeffs& sigma, const GridFunction& w, int n) {
  if (sigma.dim() != 1) throw InvalidArgument("sigma must be a 1-D polynomial");
  int degree = 0;
  for (const auto& [k, v] : sigma.entries()) {
    if (v == cd(0.0)) continue;
    if (k[0] < 0) throw InvalidArgument("sigma must be an analytic polynomial");
    degree = std::max(degree, k[0]);
  }
  if (n < 0) throw InvalidArgument("degree n must be nonnegative");
  const OnpTable table = onp_build(w, n + degree);
  // sigma * S as a map from (s_0..s_n) to coefficients 0..n+degree
  Eigen::MatrixXcd conv = Eigen::MatrixXcd::Zero(n + degree + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int i = j; i <= j + degree; ++i) conv(i, j) = sigma.at(i - j);
  const Eigen::MatrixXcd a = table.expansion_matrix() * conv;
  const Eigen::MatrixXcd head = a.topRows(n + 1);
  return {head.adjoint() * head, a.adjoint() * a};
}

double rayleigh(const MassForms& forms, const Eigen::VectorXcd& s) {
  const double total = (s.adjoint() * forms.total * s)(0, 0).real();
  if (!(total > 0.0)) return std::numeric_limits<double>::infinity();
  return (s.adjoint() * forms.head * s)(0, 0).real() / total;
}

}  // namespace

double head_mass_ratio(const FourierCoeffs& sigma, const GridFunction& w, const std::vector<cd>& s) {
  if (s.empty()) throw InvalidArgument("S must have at least one coefficient");
  const MassForms forms = mass_forms(sigma, w, static_cast<int>(s.size()) - 1);
  return rayleigh(forms, Eigen::Map<const Eigen::VectorXcd>(s.data(), static_cast<Eigen::Index>(s.size())));
}

double epsilon_poly_condition(const FourierCoeffs& sigma, const GridFunction& w, int n,
                              int trials, std::uint64_t seed) {
  const MassForms forms = mass_forms(sigma, w, n);
  const Eigen::Index m = n + 1;
  double best = std::numeric_limits<double>::infinity();

  for (Eigen::Index j = 0; j < m; ++j) best = std::min(best, rayleigh(forms, Eigen::VectorXcd::Unit(m, j)));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXcd s(m);
    for (Eigen::Index j = 0; j < m; ++j) s(j) = cd(gauss(rng), gauss(rng));
    best = std::min(best, rayleigh(forms, s));
  }

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> ges(forms.head, forms.total);
  if (ges.info() == Eigen::Success) best = std::min(best, rayleigh(forms, ges.eigenvectors().col(0)));
  return std::clamp(best, 0.0, 1.0);
}

}  // namespace szego
