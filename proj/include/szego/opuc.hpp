// include/szego/opuc.hpp

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

#ifndef SZEGO_OPUC_HPP_
#define SZEGO_OPUC_HPP_

// Orthonormal polynomials on the unit circle for a positive weight w.
//
// p_k lies in span{e_0..e_k}, has positive leading coefficient, and
// (p_m, p_n)_w = delta_{mn}. With the moment matrix G[a][b] = w^(b - a)
// factored as G = L L^H, the coefficient rows are P = L^{-1} and the
// prediction errors are E_k = L_kk^2 = D_k / D_{k-1}.

#include <vector>

#include <Eigen/Dense>

#include "szego/circle_fn.hpp"
#include "szego/outer.hpp"

namespace szego {

class OnpTable {
 public:
  const GridFunction& weight() const { return weight_; }
  int n_max() const { return n_max_; }
  /// Lower-triangular; row k holds the coefficients of p_k on e_0..e_k.
  const Eigen::MatrixXcd& coeff_matrix() const { return coeffs_; }
  const std::vector<double>& prediction_errors() const { return errors_; }
  /// Moment (Gram) matrix [w^(b - a)] for 0 <= a, b <= n_max.
  const Eigen::MatrixXcd& moment_matrix() const { return gram_; }
  /// Outer function of the weight, used by the Szego asymptotics.
  const OuterFactor& szego_function() const { return outer_; }

  /// p_k(z).
  cd eval(int k, cd z) const;
  /// max |(p_m, p_n)_w - delta_mn| over m, n <= n_max.
  double orthonormality_residual() const { return ortho_residual_; }
  /// max |P_cholesky - P_recursion| (coefficient-wise).
  double recursion_discrepancy() const { return recursion_gap_; }
  /// E[k][i] = (e_i, p_k)_w, so a = E h expands h in the p_k.
  Eigen::MatrixXcd expansion_matrix() const;

 private:
  friend OnpTable onp_build(const GridFunction& w, int n_max);
  OnpTable(GridFunction weight, OuterFactor outer) : weight_(std::move(weight)), outer_(std::move(outer)) {}

  GridFunction weight_;
  OuterFactor outer_;
  int n_max_ = 0;
  Eigen::MatrixXcd gram_;
  Eigen::MatrixXcd coeffs_;
  std::vector<double> errors_;
  double ortho_residual_ = 0.0;
  double recursion_gap_ = 0.0;
};

/// Builds p_0..p_{n_max} by moment-matrix Cholesky and cross-checks the
/// result against the Szego recursion for monic polynomials.
OnpTable onp_build(const GridFunction& w, int n_max);

/// a_k = (h, p_k)_w for k = 0..n_max; h analytic of degree <= n_max.
std::vector<cd> expand_in_onp(const FourierCoeffs& h, const OnpTable& table);

/// |z^{-k} p_k(z) conj(Phi_w(1/conj z)) - 1| for |z| > 1.
double szego_asymptotic_error(const OnpTable& table, cd z, int k);

}  // namespace szego

#endif  // SZEGO_OPUC_HPP_
