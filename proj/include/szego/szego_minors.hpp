// include/szego/szego_minors.hpp

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

#ifndef SZEGO_SZEGO_MINORS_HPP_
#define SZEGO_SZEGO_MINORS_HPP_

// Limits of bordered Toeplitz minors on the circle.
//
// For border functions f_j, g_k and outer functions phi, psi the limiting
// minor is det[ integral F_j conj(G_k) dlambda ] with
//   F_j = P_{H^2}(f_j conj(phi)),  G_k = P_{H^2}(g_k conj(psi)).
// For a positive measure phi = psi is the outer function of the density of
// its absolutely continuous part.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "szego/circle_fn.hpp"
#include "szego/outer.hpp"

namespace szego {

struct BorderedSpec {
  std::vector<FourierCoeffs> f_list;
  std::vector<FourierCoeffs> g_list;

  /// f_list = g_list = {e_k : k in indices}.
  static BorderedSpec exponentials(const std::vector<int>& indices);

  std::size_t size() const { return f_list.size(); }
  /// Equal nonzero lengths, one shared dimension.
  void validate() const;
};

struct LimitMinor {
  Eigen::MatrixXcd matrix;
  cd value;
  BorderedSpec border;
};

/// analyze(g) restricted to 0 <= k <= window.
FourierCoeffs project_H2(const GridFunction& g, int window);

/// Limiting matrix through grid projections of f_j conj(phi) and
/// g_k conj(psi). A zero phi or psi gives the zero matrix.
LimitMinor limit_matrix(const BorderedSpec& spec, const OuterFactor& phi, const OuterFactor& psi);

/// sum_{l=0}^{min(j,k)} conj(phi^(j-l)) phi^(k-l), the limit entry for
/// borders e_j, e_k computed from the coefficient table alone.
cd twform_entry(const OuterFactor& phi, int j, int k);

/// (truncated double sum of z^j conj(zeta)^k twform(j,k),
///  Phi(z) conj(Phi(zeta)) / (1 - conj(zeta) z)). Radii must be <= 0.8.
std::pair<cd, cd> genfn_check(const OuterFactor& phi, cd z, cd zeta, int truncation = 64);

/// The three equivalent forms of one positive-case limit entry:
///   int F conj(G), int F conj(g) phi, int f conj(G phi).
std::array<cd, 3> limit_entry_forms(const FourierCoeffs& f, const FourierCoeffs& g,
                                    const OuterFactor& phi);

/// Head mass sum_{k<=n} |a_k|^2 / sum_k |a_k|^2 of sigma*S expanded in the
/// orthonormal polynomials of w, for S given by its coefficients s_0..s_n.
double head_mass_ratio(const FourierCoeffs& sigma, const GridFunction& w,
                       const std::vector<cd>& s);

/// Estimated lower bound of the head-mass ratio over S in Poly_n: minimum
/// over coordinate vectors, `trials` seeded random vectors, and the
/// minimizer of the head/total Rayleigh quotient.
double epsilon_poly_condition(const FourierCoeffs& sigma, const GridFunction& w, int n,
                              int trials, std::uint64_t seed = 20021);

}  // namespace szego

#endif  // SZEGO_SZEGO_MINORS_HPP_
