// include/szego/detkit.hpp

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

#ifndef SZEGO_DETKIT_HPP_
#define SZEGO_DETKIT_HPP_

// Determinant kernels for Toeplitz and bordered Gram matrices.
//
// Ratios of determinants are never formed by dividing two determinants.
// A bordered determinant over a shared base block S is reduced to the
// determinant of the Schur complement
//
//   A_FG - A_FS A_SS^{-1} A_SG,
//
// which is exactly det[(p_j, q_k)] / det(A_SS).

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "szego/circle_fn.hpp"

namespace szego {

/// Ordered list of functions labelling rows or columns of a Gram matrix.
class IndexedBasis {
 public:
  IndexedBasis() = default;
  explicit IndexedBasis(std::vector<FourierCoeffs> items);

  /// {e_k : k in indices}, in the given order.
  static IndexedBasis exponentials(int dim, const std::vector<MultiIndex>& indices);
  static IndexedBasis exponentials(const std::vector<int>& indices);
  /// {e_{-1}, ..., e_{-n}}.
  static IndexedBasis past(int n);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const FourierCoeffs& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<FourierCoeffs>& items() const { return items_; }
  int dim() const;

 private:
  std::vector<FourierCoeffs> items_;
};

/// Overflow-safe determinant: value = exp(log_modulus) * phase.
struct LogDet {
  double log_modulus = 0.0;
  cd phase{1.0, 0.0};
  bool singular = false;

  cd value() const;
};

/// Entry (j, k) = (rows[j], cols[k])_mu. Rectangular shapes allowed.
Eigen::MatrixXcd gram_matrix(const IndexedBasis& rows, const IndexedBasis& cols,
                             const CircleMeasure& mu);

/// Levinson-Durbin prediction errors E_0..E_{n_max} of the Hermitian Toeplitz
/// matrices [mu-hat(k - j)], E_n = D_n / D_{n-1} with D_{-1} = 1.
/// `moments` must be conjugate-symmetric and cover |k| <= n_max.
std::vector<double> levinson_ratios(const FourierCoeffs& moments, int n_max);

/// det(A_FG - A_FS A_SS^{-1} A_SG). Positive measures use a Cholesky
/// factorization of the base block, complex ones pivoted LU. An empty base
/// gives det(A_FG).
cd bordered_ratio(const IndexedBasis& border_rows, const IndexedBasis& border_cols,
                  const IndexedBasis& base, const CircleMeasure& mu);

/// Same reduction on an explicit block matrix whose leading `border` rows and
/// columns are the border and whose trailing block is the base.
cd schur_ratio(const Eigen::MatrixXcd& full, Eigen::Index border, bool hermitian_base);

/// Log-determinant by partial-pivot LU.
LogDet logdet_lu(const Eigen::MatrixXcd& m);

}  // namespace szego

#endif  // SZEGO_DETKIT_HPP_
