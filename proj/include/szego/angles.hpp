// include/szego/angles.hpp

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

#ifndef SZEGO_ANGLES_HPP_
#define SZEGO_ANGLES_HPP_

// Subspace angles and oblique projections in C^m.
//
//   eps(H1, K1) = inf_{x in H1, |x|=1} sup_{y in K1, |y|=1} |(x, y)|
//
// T is the projection onto K1^perp along H1. Its norm is controlled by eps:
//   |T| <= 1/2 + sqrt(1 / (2 (1 - sqrt(1 - eps^2))) + 1/4),
//   eps >= 1 / sqrt(1 + |T|^2).

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "szego/circle_fn.hpp"

namespace szego {

class Subspace {
 public:
  /// Columns of `basis` span the subspace; they must be linearly independent.
  explicit Subspace(Eigen::MatrixXcd basis);

  Eigen::Index ambient() const { return basis_.rows(); }
  Eigen::Index dim() const { return basis_.cols(); }
  const Eigen::MatrixXcd& basis() const { return basis_; }
  /// Orthonormal basis of the same span.
  const Eigen::MatrixXcd& orthonormal() const { return q_; }

 private:
  Eigen::MatrixXcd basis_;
  Eigen::MatrixXcd q_;
};

/// Orthonormalizes the columns by Gram-matrix Cholesky, with one
/// reorthogonalization pass.
Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& basis);

double epsilon_angle(const Subspace& h1, const Subspace& k1);

/// Matrix of the projection onto K1^perp along H1.
Eigen::MatrixXcd oblique_projector(const Subspace& h1, const Subspace& k1);
Eigen::VectorXcd oblique_projection(const Subspace& h1, const Subspace& k1,
                                    const Eigen::VectorXcd& v);

struct ProjBounds {
  double epsilon = 0.0;
  double opnorm = 0.0;
  double bddT_rhs = 0.0;    // bound on |T| from eps
  double bddepsi_rhs = 0.0; // lower bound on eps from |T|
  bool pass = false;
};

/// Both inequalities, with slack Tolerances::lemma_slack.
ProjBounds check_proj_bounds(const Subspace& h1, const Subspace& k1);

/// 1/2 + sqrt(1 / (2 (1 - sqrt(1 - eps^2))) + 1/4); +inf at eps = 0.
double projection_norm_bound(double epsilon);

/// Random pair (H1, K1) of equal dimension with a well-defined oblique
/// projection, ambient <= max_ambient, dim <= max_dim.
std::pair<Subspace, Subspace> random_subspace_pair(std::uint64_t seed, int max_ambient = 20,
                                                   int max_dim = 5);

/// e_1 * phi * Poly_n in Fourier coordinates 0..ambient-1: column k holds the
/// coefficients of e_{k+1} phi, k = 0..n. phi must be analytic.
Subspace shifted_polynomial_subspace(const FourierCoeffs& phi, int n, int ambient);

struct AngleSweepRow {
  int n = 0;
  double epsilon = 0.0;
  double opnorm = 0.0;
  double bound = 0.0;  // projection_norm_bound(epsilon)
};

/// eps(H_n(phi), H_n(psi)) and |T_n| for n in [n_lo, n_hi]; phi, psi analytic
/// polynomials (or truncated outer functions).
std::vector<AngleSweepRow> angle_sweep(const FourierCoeffs& phi, const FourierCoeffs& psi,
                                       int n_lo, int n_hi);

}  // namespace szego

#endif  // SZEGO_ANGLES_HPP_
