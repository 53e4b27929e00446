// src/opuc.cpp

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

#include "szego/opuc.hpp"

#include <cmath>

#include "szego/config.hpp"
#include "szego/errors.hpp"

namespace szego {

namespace {

constexpr const char* kNotDefinite = "weight too close to GM-zero for requested degree";

// Monic orthogonal polynomials from the Szego recursion
//   Phi_{k+1} = z Phi_k + gamma_k Phi_k^*,  Phi_k^*(z) = z^k conj(Phi_k(1/conj z)),
// normalized by sqrt of the prediction error.
Eigen::MatrixXcd recursion_coefficients(const Eigen::MatrixXcd& gram, int n_max) {
  auto w_hat = [&](int m) {  // w^(m) = gram(0, m) for m >= 0
    return m >= 0 ? gram(0, m) : std::conj(gram(0, -m));
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
  std::vector<cd> monic{1.0};
  double err = gram(0, 0).real();
  out(0, 0) = 1.0 / std::sqrt(err);
  for (int k = 0; k < n_max; ++k) {
    // <z Phi_k, 1>_w and <Phi_k^*, 1>_w
    cd shifted = 0.0, reversed = 0.0;
    for (int a = 0; a <= k; ++a) {
      shifted += monic[static_cast<std::size_t>(a)] * w_hat(-(a + 1));
      reversed += std::conj(monic[static_cast<std::size_t>(k - a)]) * w_hat(-a);
    }
    const cd gamma = -shifted / reversed;
    std::vector<cd> next(static_cast<std::size_t>(k) + 2, 0.0);
    for (int a = 0; a <= k; ++a) {
      next[static_cast<std::size_t>(a) + 1] += monic[static_cast<std::size_t>(a)];
      next[static_cast<std::size_t>(a)] += gamma * std::conj(monic[static_cast<std::size_t>(k - a)]);
    }
    monic = std::move(next);
    err *= 1.0 - std::norm(gamma);
    if (!(err > 0.0)) throw NumericalFailure(kNotDefinite);
    const double scale = 1.0 / std::sqrt(err);
    for (int a = 0; a <= k + 1; ++a) out(k + 1, a) = monic[static_cast<std::size_t>(a)] * scale;
  }
  return out;
}

}  // namespace

OnpTable onp_build(const GridFunction& w, int n_max) {
  if (w.dim() != 1) throw InvalidArgument("orthogonal polynomials need a 1-D weight");
  if (n_max < 0 || n_max > Tolerances::opuc_max_degree)
    throw InvalidArgument("degree bound must lie in [0, " +
                          std::to_string(Tolerances::opuc_max_degree) + "]");
  const int window = w.dims()[0] / 2 - 1;
  if (n_max > window / 2) throw AliasingError("degree bound exceeds half the grid window");
  for (const cd& s : w.samples())
    if (!(s.real() > 0.0)) throw InvalidArgument("weight must be strictly positive");

  OnpTable table(w, outer_factor(w));
  table.n_max_ = n_max;

  const FourierCoeffs moments = analyze(w, uniform_window(1, n_max));
  const Eigen::Index n = n_max + 1;
  table.gram_.resize(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      table.gram_(a, b) = moments.at(static_cast<int>(b - a));
  // the weight is real, so enforce exact Hermitian symmetry
  table.gram_ = 0.5 * (table.gram_ + table.gram_.adjoint()).eval();

  Eigen::LLT<Eigen::MatrixXcd> llt(table.gram_);
  if (llt.info() != Eigen::Success) throw NumericalFailure(kNotDefinite);
  const Eigen::MatrixXcd l = llt.matrixL();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double d = l(k, k).real();
    if (!(d > 0.0)) throw NumericalFailure(kNotDefinite);
    table.errors_.push_back(d * d);
  }
  table.coeffs_ = l.triangularView<Eigen::Lower>().solve(Eigen::MatrixXcd::Identity(n, n));

  const Eigen::MatrixXcd ortho =
      table.coeffs_ * table.gram_ * table.coeffs_.adjoint();
  table.ortho_residual_ = (ortho - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd via_recursion = recursion_coefficients(table.gram_, n_max);
  const double scale = std::max(1.0, table.coeffs_.cwiseAbs().maxCoeff());
  table.recursion_gap_ = (table.coeffs_ - via_recursion).cwiseAbs().maxCoeff() / scale;
  if (table.recursion_gap_ > 1e-8) throw NumericalFailure(kNotDefinite);
  return table;
}

cd OnpTable::eval(int k, cd z) const {
  if (k < 0 || k > n_max_) throw InvalidArgument("polynomial degree out of table range");
  cd acc = 0.0;
  for (int i = k; i >= 0; --i) acc = acc * z + coeffs_(k, i);
  return acc;
}

Eigen::MatrixXcd OnpTable::expansion_matrix() const {
  // (e_i, p_k)_w = sum_b conj(P[k][b]) G[i][b]
  return coeffs_.conjugate() * gram_.transpose();
}

std::vector<cd> expand_in_onp(const FourierCoeffs& h, const OnpTable& table) {
  if (h.dim() != 1) throw InvalidArgument("expansion needs a 1-D polynomial");
  Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(table.n_max() + 1);
  for (const auto& [k, v] : h.entries()) {
    if (v == cd(0.0)) continue;
    if (k[0] < 0 || k[0] > table.n_max())
      throw InvalidArgument("polynomial degree exceeds the orthonormal table");
    vec(k[0]) = v;
  }
  const Eigen::VectorXcd a = table.expansion_matrix() * vec;
  return {a.data(), a.data() + a.size()};
}

double szego_asymptotic_error(const OnpTable& table, cd z, int k) {
  if (std::abs(z) <= 1.0) throw InvalidArgument("asymptotics are evaluated outside the closed disc");
  if (k < 0 || k > table.n_max()) throw InvalidArgument("degree out of table range");
  // z^{-k} p_k(z) = sum_i P[k][i] z^{i-k}, summed from the top to stay bounded
  const cd inv = 1.0 / z;
  cd scaled = 0.0, power = 1.0;
  for (int i = k; i >= 0; --i) {
    scaled += table.coeff_matrix()(k, i) * power;
    power *= inv;
  }
  const cd phi = eval_Phi(table.szego_function(), std::conj(inv));
  return std::abs(scaled * std::conj(phi) - 1.0);
}

}  // namespace szego
