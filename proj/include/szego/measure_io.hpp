// include/szego/measure_io.hpp

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

#ifndef SZEGO_MEASURE_IO_HPP_
#define SZEGO_MEASURE_IO_HPP_

// JSON measure format:
//
//   { "dims": [N, ...],
//     "density": {"preset": name, "params": {...}} | {"samples": [[re,im],...]},
//     "atoms": [{"t": [t1, ...], "mass": [re, im] | re}],
//     "positive": bool (optional) }
//
// Presets (t is the coordinate selected by "axis", default 0):
//   const       c
//   cos_offset  a + b cos(2 pi t)
//   exp_cos     exp(a cos(2 pi t))
//   poly_mod2   |sum_k coeffs[k] e^{2 pi i k t}|^2
//   indicator   c * 1[alpha <= t < beta]
//   product     prod_i factors[i](x_i), one 1-D preset per axis
//   cross_poly  psi(t) * conj(phi(t)) for analytic polynomials phi, psi

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "szego/circle_fn.hpp"

namespace szego {

struct LoadedMeasure {
  CircleMeasure measure;
  /// (phi, psi) when the density is the cross_poly preset.
  std::optional<std::pair<FourierCoeffs, FourierCoeffs>> cross_factors;
};

/// Samples of a preset density object {"preset": ..., "params": {...}}.
GridFunction density_from_preset(const nlohmann::json& preset, const std::vector<int>& dims);

/// Parses a full measure document. `grid` overrides every entry of "dims".
LoadedMeasure measure_from_json(const nlohmann::json& doc, std::optional<int> grid = std::nullopt);

/// Short preset syntax used on the command line, e.g.
///   "cos_offset:a=2,b=1", "poly_mod2:coeffs=1;-0.5", "indicator:alpha=0,beta=0.5,axis=1".
/// A string starting with '{' is parsed as a JSON preset object.
nlohmann::json parse_preset_shorthand(const std::string& text);

/// Coefficient list: numbers or [re, im] pairs.
std::vector<cd> complex_list_from_json(const nlohmann::json& j);

/// Dimension implied by a preset object (product: number of factors).
int preset_dimension(const nlohmann::json& preset);

}  // namespace szego

#endif  // SZEGO_MEASURE_IO_HPP_
