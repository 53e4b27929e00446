// src/detkit.cpp

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

#include "szego/detkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "szego/config.hpp"
#include "szego/errors.hpp"

namespace szego {

IndexedBasis::IndexedBasis(std::vector<FourierCoeffs> items) : items_(std::move(items)) {
  for (const auto& f : items_)
    if (f.dim() != items_.front().dim())
      throw InvalidArgument("basis functions must share one dimension");
}

IndexedBasis IndexedBasis::exponentials(int dim, const std::vector<MultiIndex>& indices) {
  std::vector<FourierCoeffs> items;
  items.reserve(indices.size());
  for (const auto& k : indices) items.push_back(FourierCoeffs::monomial(dim, k));
  return IndexedBasis(std::move(items));
}

IndexedBasis IndexedBasis::exponentials(const std::vector<int>& indices) {
  std::vector<MultiIndex> ks;
  for (int k : indices) ks.push_back({k, 0, 0});
  return exponentials(1, ks);
}

IndexedBasis IndexedBasis::past(int n) {
  std::vector<int> ks;
  for (int j = 1; j <= n; ++j) ks.push_back(-j);
  return exponentials(ks);
}

int IndexedBasis::dim() const {
  if (items_.empty()) throw InvalidArgument("empty basis has no dimension");
  return items_.front().dim();
}

cd LogDet::value() const {
  if (singular) return 0.0;
  return std::exp(log_modulus) * phase;
}

namespace {

bool is_single_exponential(const FourierCoeffs& f, MultiIndex& k) {
  if (f.entries().size() != 1 || f.entries().begin()->second != cd(1.0)) return false;
  k = f.entries().begin()->first;
  return true;
}

}  // namespace

Eigen::MatrixXcd gram_matrix(const IndexedBasis& rows, const IndexedBasis& cols,
                             const CircleMeasure& mu) {
  const auto nr = static_cast<Eigen::Index>(rows.size());
  const auto nc = static_cast<Eigen::Index>(cols.size());
  Eigen::MatrixXcd g(nr, nc);
  // exponentials reduce to a single moment lookup
  std::vector<MultiIndex> rk(rows.size()), ck(cols.size());
  std::vector<bool> rexp(rows.size()), cexp(cols.size());
  for (std::size_t j = 0; j < rows.size(); ++j) rexp[j] = is_single_exponential(rows[j], rk[j]);
  for (std::size_t k = 0; k < cols.size(); ++k) cexp[k] = is_single_exponential(cols[k], ck[k]);
  for (Eigen::Index j = 0; j < nr; ++j) {
    for (Eigen::Index k = 0; k < nc; ++k) {
      if (rexp[j] && cexp[k])
        g(j, k) = moment(mu, subtract(ck[k], rk[j]));
      else
        g(j, k) = inner_product_mu(rows[j], cols[k], mu);
    }
  }
  return g;
}

std::vector<double> levinson_ratios(const FourierCoeffs& moments, int n_max) {
  if (n_max < 0) throw InvalidArgument("n_max must be nonnegative");
  if (moments.dim() != 1) throw InvalidArgument("Levinson recursion needs 1-D moments");
  if (!moments.conj_symmetric())
    throw InvalidArgument("moments must be flagged conjugate-symmetric");
  if (moments.window()[0] < n_max) throw InvalidArgument("moment table shorter than n_max");

  // Matrix entries R[i][j] = mu-hat(j - i); the row-(n+1) entries against
  // the predictor are r(m) = mu-hat(-m).
  auto r = [&](int m) { return moments.at(-m); };

  std::vector<double> errors;
  errors.reserve(static_cast<std::size_t>(n_max) + 1);
  double e = moments.at(0).real();
  if (!(e > 0.0)) throw NumericalFailure("matrix not positive definite (numerical)");
  errors.push_back(e);

  std::vector<cd> a{1.0};  // predictor, a[0] = 1
  for (int n = 1; n <= n_max; ++n) {
    cd delta = 0.0;
    for (int j = 0; j < n; ++j) delta += r(n - j) * a[static_cast<std::size_t>(j)];
    const cd kappa = -delta / e;
    std::vector<cd> next(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
      const cd ai = i < n ? a[static_cast<std::size_t>(i)] : cd(0.0);
      const cd back = (n - i) < n ? std::conj(a[static_cast<std::size_t>(n - i)]) : cd(0.0);
      next[static_cast<std::size_t>(i)] = ai + kappa * back;
    }
    a = std::move(next);
    const double shrink = 1.0 - std::norm(kappa);
    e *= shrink;
    if (!(shrink > 0.0) || !(e > 0.0))
      throw NumericalFailure("matrix not positive definite (numerical)");
    errors.push_back(e);
  }
  return errors;
}

LogDet logdet_lu(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  LogDet out;
  if (m.rows() == 0) return out;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  const Eigen::MatrixXcd& packed = lu.matrixLU();
  out.phase = lu.permutationP().determinant() < 0 ? cd(-1.0) : cd(1.0);
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    const double mag = std::abs(packed(i, i));
    if (!(mag >= Tolerances::singular_pivot)) {
      out.singular = true;
      out.log_modulus = -std::numeric_limits<double>::infinity();
      out.phase = 0.0;
      return out;
    }
    out.log_modulus += std::log(mag);
    out.phase *= packed(i, i) / mag;
  }
  out.phase /= std::abs(out.phase);
  return out;
}

cd schur_ratio(const Eigen::MatrixXcd& full, Eigen::Index border, bool hermitian_base) {
  const Eigen::Index n = full.rows() - border;
  if (full.rows() != full.cols() || border < 1 || n < 0)
    throw InvalidArgument("border size mismatch");
  const Eigen::MatrixXcd a_fg = full.topLeftCorner(border, border);
  if (n == 0) return logdet_lu(a_fg).value();

  const Eigen::MatrixXcd a_ss = full.bottomRightCorner(n, n);
  const Eigen::MatrixXcd a_fs = full.topRightCorner(border, n);
  const Eigen::MatrixXcd a_sg = full.bottomLeftCorner(n, border);

  // Pivots are judged relative to the largest diagonal entry of the base
  // block; an exactly repeated base element leaves only rounding noise.
  const double scale = a_ss.diagonal().cwiseAbs().maxCoeff();
  const double floor = std::max(Tolerances::singular_pivot, Tolerances::relative_pivot * scale);
  Eigen::MatrixXcd solved;
  if (hermitian_base) {
    Eigen::LLT<Eigen::MatrixXcd> llt(a_ss);
    if (llt.info() != Eigen::Success) throw NumericalFailure("base block singular");
    const Eigen::MatrixXcd& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < n; ++i)
      if (!(std::norm(l(i, i)) >= floor)) throw NumericalFailure("base block singular");
    solved = llt.solve(a_sg);
  } else {
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a_ss);
    const Eigen::MatrixXcd& u = lu.matrixLU();
    for (Eigen::Index i = 0; i < n; ++i)
      if (!(std::abs(u(i, i)) >= floor)) throw NumericalFailure("base block singular");
    solved = lu.solve(a_sg);
  }
  const Eigen::MatrixXcd schur = a_fg - a_fs * solved;
  return logdet_lu(schur).value();
}

cd bordered_ratio(const IndexedBasis& border_rows, const IndexedBasis& border_cols,
                  const IndexedBasis& base, const CircleMeasure& mu) {
  if (border_rows.size() != border_cols.size() || border_rows.empty())
    throw InvalidArgument("border size mismatch");
  std::vector<FourierCoeffs> rows = border_rows.items();
  std::vector<FourierCoeffs> cols = border_cols.items();
  rows.insert(rows.end(), base.items().begin(), base.items().end());
  cols.insert(cols.end(), base.items().begin(), base.items().end());
  const Eigen::MatrixXcd full =
      gram_matrix(IndexedBasis(std::move(rows)), IndexedBasis(std::move(cols)), mu);
  return schur_ratio(full, static_cast<Eigen::Index>(border_rows.size()), mu.positive());
}

}  // namespace szego
