// include/szego/config.hpp

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

#ifndef SZEGO_CONFIG_HPP_
#define SZEGO_CONFIG_HPP_

namespace szego {

// Every numerical threshold used by the library lives here.
struct Tolerances {
  // Pivots with modulus below this mark a determinant as singular.
  static constexpr double singular_pivot = 1e-300;
  // Base-block pivots below this times the largest diagonal entry.
  static constexpr double relative_pivot = 1e-13;
  // entry(-k) == conj(entry(k)) check for conjugate-symmetric tables.
  static constexpr double conj_symmetry = 1e-12;
  // Smallest singular value of a column-normalized basis.
  static constexpr double basis_independence = 1e-10;
  // Mixed Gram systems of oblique projections below this are rejected.
  static constexpr double oblique_singular = 1e-12;
  // Mean of log f below this is treated as GM(f) = 0.
  static constexpr double gm_log_floor = -700.0;
  // Spectral factor entries on the negative half-space must be below this.
  static constexpr double spectral_leak = 1e-10;
  // Slack allowed in the projection-norm / angle inequalities.
  static constexpr double lemma_slack = 1e-9;
  // Relative imaginary part tolerated in a "real" density.
  static constexpr double real_density = 1e-10;

  static constexpr int min_grid = 8;
  static constexpr int max_torus_dim = 3;
  static constexpr int opuc_max_degree = 256;
};

}  // namespace szego

#endif  // SZEGO_CONFIG_HPP_
