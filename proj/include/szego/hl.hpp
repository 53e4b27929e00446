// include/szego/hl.hpp

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

#ifndef SZEGO_HL_HPP_
#define SZEGO_HL_HPP_

// Half-space orders on Z^d and spectral factorization on the torus.
//
// A half-space S has S u (-S) = Z^d \ {0}, S n (-S) = {} and S + S in S.
// HL^2 is the closed span of e_k for k in S u {0}. A spectral factor of
// w > 0 is phi = exp(g^(0)/2 + sum_{k in S} g^(k) e_k) with g = log w; it
// lies in HL^2, |phi|^2 = w and phi^(0) = sqrt(GM(w)).

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "szego/circle_fn.hpp"
#include "szego/detkit.hpp"
#include "szego/szego_minors.hpp"

namespace szego {

enum class Membership { negative = -1, zero = 0, positive = 1 };

class HalfSpaceOrder {
 public:
  enum class Kind { lexicographic, linear_form };

  /// k > 0 iff its first nonzero coordinate is positive.
  static HalfSpaceOrder lexicographic(int dim);
  /// k > 0 iff k.x > 0; ties on the hyperplane k.x = 0 fall back to the
  /// lexicographic rule so that rational directions still give an order.
  static HalfSpaceOrder linear_form(std::vector<double> direction);

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  const std::vector<double>& direction() const { return direction_; }

  Membership membership(const MultiIndex& k) const;
  bool in_S(const MultiIndex& k) const { return membership(k) == Membership::positive; }
  bool in_minus_S(const MultiIndex& k) const { return membership(k) == Membership::negative; }

  /// Heuristic: a linear form with no small integer relation among the
  /// direction coordinates (or d = 1). Floating point cannot certify
  /// irrationality, so this is a screening test.
  bool is_archimedean() const;

  /// Exhaustive check of partition, antisymmetry and additivity over
  /// [-radius, radius]^d. Returns an empty string or the first violation.
  std::string check_axioms(int radius = 8) const;

 private:
  HalfSpaceOrder(int dim, Kind kind, std::vector<double> direction);
  int dim_;
  Kind kind_;
  std::vector<double> direction_;
};

/// {"kind": "lex" | "form", "direction": [...]}; lex needs `dim`.
HalfSpaceOrder order_from_json(const nlohmann::json& j, int dim);
nlohmann::json order_to_json(const HalfSpaceOrder& order);
/// "lex" or "form:x1,x2,...".
HalfSpaceOrder parse_order(const std::string& text, int dim);

struct SpectralFactor {
  FourierCoeffs coeffs;  // S u {0} entries inside the window
  double gm = 0.0;
  GridFunction grid;     // boundary values on the full grid
  double dropped_max = 0.0;  // largest S-entry outside the window
  double leak_max = 0.0;     // largest entry on -S (before thresholding)

  bool is_zero() const { return gm == 0.0; }
};

/// Spectral factor of a nonnegative weight on T^d. window < 0 selects N_i/4
/// per axis. A nonpositive sample gives the zero factor.
/// Entries on -S above Tolerances::spectral_leak throw "window too small".
SpectralFactor hd_spectral_factor(const GridFunction& w, const HalfSpaceOrder& order,
                                  int window = -1);

/// analyze(g) restricted to S u {0}. window < 0 selects the Nyquist window.
FourierCoeffs hd_project_HL2(const GridFunction& g, const HalfSpaceOrder& order, int window = -1);

/// (-S) n [-m, m]^d, sorted by sup-norm shell then lexicographically, so the
/// list for m is a prefix of the list for m + 1.
std::vector<MultiIndex> hd_sn_indices(const HalfSpaceOrder& order, int m);
IndexedBasis hd_sn_sets(const HalfSpaceOrder& order, int m);

/// Bordered determinant ratio over the base hd_sn_sets(order, m).
cd hd_bordered_ratio(const IndexedBasis& spec_f, const IndexedBasis& spec_g,
                     const HalfSpaceOrder& order, int m, const CircleMeasure& mu);

/// det[(P_HL2(f_j conj phi), P_HL2(g_k conj psi))]. With a zero factor the
/// limit is 0 for archimedean orders; otherwise UnsupportedCase.
LimitMinor hd_limit_matrix(const IndexedBasis& spec_f, const IndexedBasis& spec_g,
                           const SpectralFactor& phi, const SpectralFactor& psi,
                           const HalfSpaceOrder& order);

/// Largest coefficient of 1/phi on -S over the whole grid. Small values mean
/// 1/phi is itself in HL^2.
double inverse_leak(const SpectralFactor& phi, const HalfSpaceOrder& order);

/// max |w q_m - phi^(0) phi| on the grid, where q_m = 1 - (projection of 1
/// onto span{e_k : k in S_m}) in L^2(w). Tends to 0 as m grows.
double uniqueness_residual(const GridFunction& w, const SpectralFactor& phi,
                           const HalfSpaceOrder& order, int m);

}  // namespace szego

#endif  // SZEGO_HL_HPP_
