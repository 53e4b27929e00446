// include/szego/circle_fn.hpp

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

#ifndef SZEGO_CIRCLE_FN_HPP_
#define SZEGO_CIRCLE_FN_HPP_

// Functions and measures on the circle T = R/Z and the torus T^d (d <= 3).
//
// Densities are sampled on uniform power-of-two grids; integrals against
// Lebesgue measure are grid averages, which is exact for trigonometric
// polynomials whose spectrum fits inside the grid's Nyquist window. Any
// request that would read a coefficient outside that window throws
// AliasingError rather than silently wrapping around.

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace szego {

using cd = std::complex<double>;

/// Index into Z^d. Coordinates past the active dimension are zero.
using MultiIndex = std::array<int, 3>;
/// Point of [0,1)^d; unused coordinates are zero.
using Point = std::array<double, 3>;
/// Per-axis bound on |k_i|; unused axes are zero.
using Window = std::array<int, 3>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// e^{2 pi i k.t}
cd exp_mode(const MultiIndex& k, const Point& t);

MultiIndex negate(const MultiIndex& k);
MultiIndex add(const MultiIndex& a, const MultiIndex& b);
MultiIndex subtract(const MultiIndex& a, const MultiIndex& b);

/// Window with bound `w` on each of the first `dim` axes.
Window uniform_window(int dim, int w);

class GridFunction {
 public:
  GridFunction(std::vector<int> dims, std::vector<cd> samples);

  static GridFunction constant(std::vector<int> dims, cd value);
  static GridFunction from_function(std::vector<int> dims,
                                    const std::function<cd(const Point&)>& fn);

  int dim() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t size() const { return samples_.size(); }
  const std::vector<cd>& samples() const { return samples_; }
  cd operator[](std::size_t i) const { return samples_[i]; }

  /// Grid point of the flat (row-major) sample index.
  Point point(std::size_t flat) const;

  /// Average of the samples, i.e. the integral against Lebesgue measure.
  cd mean() const;
  /// Largest |Im| relative to max(1, |Re|) over all samples.
  double max_relative_imag() const;

  template <class F>
  GridFunction transformed(F&& f) const {
    std::vector<cd> out(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) out[i] = f(samples_[i]);
    return GridFunction(dims_, std::move(out));
  }

  GridFunction conj() const;

 private:
  std::vector<int> dims_;
  std::vector<cd> samples_;
};

/// Pointwise product; grids must have identical dims.
GridFunction operator*(const GridFunction& a, const GridFunction& b);

/// Nyquist window of a grid: N_i/2 - 1 on each active axis.
Window nyquist_window(const std::vector<int>& dims);

/// Finitely supported coefficient table on Z^d.
class FourierCoeffs {
 public:
  explicit FourierCoeffs(int dim = 1);

  static FourierCoeffs monomial(int dim, const MultiIndex& k, cd value = 1.0);
  /// 1-D table with entry(offset + i) = values[i].
  static FourierCoeffs from_1d(const std::vector<cd>& values, int offset = 0);
  static FourierCoeffs from_entries(
      int dim, const std::vector<std::pair<MultiIndex, cd>>& entries);

  int dim() const { return dim_; }
  cd at(const MultiIndex& k) const;
  cd at(int k) const { return at(MultiIndex{k, 0, 0}); }
  /// Sets an entry; the declared window grows to contain k.
  void set(const MultiIndex& k, cd value);
  void add_to(const MultiIndex& k, cd value);

  const std::map<MultiIndex, cd>& entries() const { return entries_; }
  const Window& window() const { return window_; }
  /// Max over axes of the window bound.
  int max_extent() const;
  bool empty() const { return entries_.empty(); }

  /// Drops entries with |value| <= threshold.
  FourierCoeffs pruned(double threshold = 0.0) const;

  /// Validates entry(-k) == conj(entry(k)) within Tolerances::conj_symmetry
  /// and sets the flag; throws InvalidArgument on violation.
  void mark_conj_symmetric();
  bool conj_symmetric() const { return conj_symmetric_; }

  /// Value of the trigonometric polynomial at t.
  cd evaluate(const Point& t) const;

 private:
  void check_index(const MultiIndex& k) const;

  int dim_;
  std::map<MultiIndex, cd> entries_;
  Window window_{0, 0, 0};
  bool conj_symmetric_ = false;
};

/// entry(k) = grid average of g * conj(e_k), for all |k_i| <= window_i.
FourierCoeffs analyze(const GridFunction& g, const Window& window);
/// Samples of the trigonometric polynomial c on a grid of the given dims.
GridFunction synthesize(const FourierCoeffs& c, const std::vector<int>& dims);

struct Atom {
  Point position{0.0, 0.0, 0.0};
  cd mass{0.0, 0.0};
};

/// Absolutely continuous density plus finitely many atoms.
class CircleMeasure {
 public:
  /// `positive` unset: detected from the data. Set to true: validated.
  /// Set to false: treated as a complex measure even if nonnegative.
  CircleMeasure(GridFunction density, std::vector<Atom> atoms = {},
                std::optional<bool> positive = std::nullopt);

  static CircleMeasure lebesgue(std::vector<int> dims);

  const GridFunction& density() const { return density_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool positive() const { return positive_; }
  int dim() const { return density_.dim(); }
  bool density_is_zero() const { return density_zero_; }

  /// Fourier coefficient of the density part; throws AliasingError outside
  /// the Nyquist window unless the density vanishes.
  cd density_coefficient(const MultiIndex& k) const;

  /// Same measure without its atoms.
  CircleMeasure absolutely_continuous_part() const;

 private:
  GridFunction density_;
  std::vector<Atom> atoms_;
  bool positive_ = false;
  bool density_zero_ = false;
  std::vector<cd> spectrum_;  // DFT of density / total, in FFT bin order
};

/// mu-hat(k) = integral of e^{-2 pi i k.t} dmu(t).
cd moment(const CircleMeasure& mu, const MultiIndex& k);
inline cd moment(const CircleMeasure& mu, int k) {
  return moment(mu, MultiIndex{k, 0, 0});
}

/// Table of mu-hat(k) for |k_i| <= window_i.
FourierCoeffs moment_coeffs(const CircleMeasure& mu, const Window& window);

/// (p, q)_mu = integral of p conj(q) dmu.
cd inner_product_mu(const FourierCoeffs& p, const FourierCoeffs& q,
                    const CircleMeasure& mu);

}  // namespace szego

#endif  // SZEGO_CIRCLE_FN_HPP_
