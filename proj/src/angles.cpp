// src/angles.cpp

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

#include "szego/angles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "szego/config.hpp"
#include "szego/errors.hpp"

namespace szego {

namespace {

double smallest_singular_value(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().minCoeff();
}

double largest_singular_value(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().maxCoeff();
}

Eigen::MatrixXcd cholesky_pass(const Eigen::MatrixXcd& b) {
  const Eigen::MatrixXcd gram = b.adjoint() * b;
  Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(b);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(b.rows(), b.cols());
  }
  // Q = B L^{-H}
  const Eigen::MatrixXcd lower = llt.matrixL();
  return lower.triangularView<Eigen::Lower>().solve(b.adjoint()).adjoint();
}

}  // namespace

Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& basis) {
  Eigen::MatrixXcd b = basis;
  for (Eigen::Index j = 0; j < b.cols(); ++j) b.col(j).normalize();
  return cholesky_pass(cholesky_pass(b));
}

Subspace::Subspace(Eigen::MatrixXcd basis) : basis_(std::move(basis)) {
  if (basis_.cols() == 0 || basis_.rows() == 0) throw InvalidArgument("degenerate basis");
  Eigen::MatrixXcd normalized = basis_;
  for (Eigen::Index j = 0; j < normalized.cols(); ++j) {
    const double len = normalized.col(j).norm();
    if (!(len > 0.0)) throw InvalidArgument("degenerate basis");
    normalized.col(j) /= len;
  }
  if (basis_.cols() > basis_.rows() ||
      smallest_singular_value(normalized) <= Tolerances::basis_independence)
    throw InvalidArgument("degenerate basis");
  q_ = orthonormalize(basis_);
}

double epsilon_angle(const Subspace& h1, const Subspace& k1) {
  if (h1.ambient() != k1.ambient()) throw InvalidArgument("subspaces live in different spaces");
  if (h1.dim() > k1.dim()) return 0.0;
  // singular values of Q_K^H Q_H: |P_K x| over unit x in H1
  const double s = smallest_singular_value(k1.orthonormal().adjoint() * h1.orthonormal());
  return std::clamp(s, 0.0, 1.0);
}

Eigen::MatrixXcd oblique_projector(const Subspace& h1, const Subspace& k1) {
  if (h1.ambient() != k1.ambient()) throw InvalidArgument("subspaces live in different spaces");
  if (h1.dim() != k1.dim())
    throw InvalidArgument("oblique projection undefined (H1 + K1^perp is not a direct sum of the space)");
  const Eigen::MatrixXcd& qh = h1.orthonormal();
  const Eigen::MatrixXcd& qk = k1.orthonormal();
  const Eigen::MatrixXcd mixed = qk.adjoint() * qh;
  if (smallest_singular_value(mixed) < Tolerances::oblique_singular)
    throw InvalidArgument("oblique projection undefined (H1 meets K1^perp)");
  // v = u + w, u = Q_H c in H1, w in K1^perp  <=>  (Q_K^H Q_H) c = Q_K^H v
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(h1.ambient(), h1.ambient());
  return id - qh * mixed.partialPivLu().solve(qk.adjoint());
}

Eigen::VectorXcd oblique_projection(const Subspace& h1, const Subspace& k1,
                                    const Eigen::VectorXcd& v) {
  if (v.size() != h1.ambient()) throw InvalidArgument("vector length does not match the space");
  return oblique_projector(h1, k1) * v;
}

double projection_norm_bound(double epsilon) {
  if (!(epsilon > 0.0)) return std::numeric_limits<double>::infinity();
  const double e2 = std::min(epsilon * epsilon, 1.0);
  // 1 - sqrt(1 - e^2), written without cancellation
  const double gap = e2 / (1.0 + std::sqrt(1.0 - e2));
  return 0.5 + std::sqrt(1.0 / (2.0 * gap) + 0.25);
}

ProjBounds check_proj_bounds(const Subspace& h1, const Subspace& k1) {
  ProjBounds out;
  out.epsilon = epsilon_angle(h1, k1);
  out.opnorm = largest_singular_value(oblique_projector(h1, k1));
  out.bddT_rhs = projection_norm_bound(out.epsilon);
  out.bddepsi_rhs = 1.0 / std::sqrt(1.0 + out.opnorm * out.opnorm);
  out.pass = out.opnorm <= out.bddT_rhs + Tolerances::lemma_slack &&
             out.epsilon >= out.bddepsi_rhs - Tolerances::lemma_slack;
  return out;
}

std::pair<Subspace, Subspace> random_subspace_pair(std::uint64_t seed, int max_ambient, int max_dim) {
  if (max_ambient < 1 || max_dim < 1) throw InvalidArgument("random subspace sizes must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto random_matrix = [&](Eigen::Index r, Eigen::Index c) {
    Eigen::MatrixXcd m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = cd(gauss(rng), gauss(rng));
    return m;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int m = std::uniform_int_distribution<int>(1, max_ambient)(rng);
    const int d = std::uniform_int_distribution<int>(1, std::min(m, max_dim))(rng);
    const Eigen::MatrixXcd h = random_matrix(m, d);
    // K1 ranges from a small perturbation of H1 to an unrelated subspace
    const double spread = std::pow(10.0, std::uniform_real_distribution<double>(-3.0, 1.0)(rng));
    const Eigen::MatrixXcd k = h + spread * random_matrix(m, d);
    try {
      Subspace hs(h), ks(k);
      if (smallest_singular_value(ks.orthonormal().adjoint() * hs.orthonormal()) < 1e-6) continue;
      return {std::move(hs), std::move(ks)};
    } catch (const InvalidArgument&) {
      continue;
    }
  }
  throw NumericalFailure("could not draw a well-posed subspace pair");
}

Subspace shifted_polynomial_subspace(const FourierCoeffs& phi, int n, int ambient) {
  if (phi.dim() != 1) throw InvalidArgument("phi must be 1-D");
  int degree = 0;
  for (const auto& [k, v] : phi.entries()) {
    if (v == cd(0.0)) continue;
    if (k[0] < 0) throw InvalidArgument("phi must be analytic");
    degree = std::max(degree, k[0]);
  }
  if (n < 0 || ambient < n + degree + 2) throw InvalidArgument("ambient window too small");
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(ambient, n + 1);
  for (int k = 0; k <= n; ++k)
    for (const auto& [idx, v] : phi.entries())
      if (idx[0] >= 0) basis(k + 1 + idx[0], k) += v;
  return Subspace(std::move(basis));
}

std::vector<AngleSweepRow> angle_sweep(const FourierCoeffs& phi, const FourierCoeffs& psi,
                                       int n_lo, int n_hi) {
  if (n_lo < 0 || n_hi < n_lo) throw InvalidArgument("sweep range must be nonempty and increasing");
  const int degree = std::max(phi.window()[0], psi.window()[0]);
  std::vector<AngleSweepRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const int ambient = n + degree + 2;
    const Subspace h = shifted_polynomial_subspace(phi, n, ambient);
    const Subspace k = shifted_polynomial_subspace(psi, n, ambient);
    AngleSweepRow row;
    row.n = n;
    row.epsilon = epsilon_angle(h, k);
    row.opnorm = largest_singular_value(oblique_projector(h, k));
    row.bound = projection_norm_bound(row.epsilon);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace szego
