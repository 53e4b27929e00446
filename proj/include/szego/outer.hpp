// include/szego/outer.hpp

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

#ifndef SZEGO_OUTER_HPP_
#define SZEGO_OUTER_HPP_

// Geometric means and outer functions on the circle.
//
// For f > 0 with g = log f, the outer function is
//   Phi_f(z) = exp( g^(0)/2 + sum_{n >= 1} g^(n) z^n ),
// so |phi_f|^2 = f on the circle and Phi_f(0) = sqrt(GM(f)). It is built on
// the grid by exponentiating the analytic half of the log-spectrum pointwise
// and re-analyzing the result.

#include "szego/circle_fn.hpp"

namespace szego {

/// exp of the grid average of log f. Zero if any sample is zero or the mean
/// log is below Tolerances::gm_log_floor. Throws on negative samples.
double geometric_mean(const GridFunction& f);

class OuterFactor {
 public:
  /// The zero factor on a grid of the given dims (GM(f) = 0 case).
  static OuterFactor zero(const std::vector<int>& dims);
  /// Factor given by an analytic polynomial with no zeros in the closed
  /// disc; throws InvalidArgument if the polynomial is not outer.
  static OuterFactor from_polynomial(const FourierCoeffs& coeffs, int grid);

  OuterFactor(FourierCoeffs coeffs, double gm, GridFunction grid, double dropped_max);

  /// Coefficients phi^(0..window).
  const FourierCoeffs& coeffs() const { return coeffs_; }
  double gm() const { return gm_; }
  bool is_zero() const { return gm_ == 0.0; }
  /// Boundary values phi_f on the grid (not truncated).
  const GridFunction& grid() const { return grid_; }
  /// Largest |phi^(k)| left out of coeffs (negative k or k > window).
  double dropped_max() const { return dropped_max_; }
  int window() const { return coeffs_.window()[0]; }

 private:
  FourierCoeffs coeffs_;
  double gm_;
  GridFunction grid_;
  double dropped_max_;
};

/// Outer factor of a strictly positive real density on T. window < 0 selects
/// N/4. Densities with a nonpositive sample (GM-zero convention) give
/// OuterFactor::zero.
OuterFactor outer_factor(const GridFunction& f, int window = -1);

/// Power series sum_n phi^(n) z^n, |z| < 1.
cd eval_Phi(const OuterFactor& factor, cd z);

}  // namespace szego

#endif  // SZEGO_OUTER_HPP_
