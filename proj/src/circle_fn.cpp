// src/circle_fn.cpp

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

#include "szego/circle_fn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fft.hpp"
#include "szego/config.hpp"
#include "szego/errors.hpp"

namespace szego {

cd exp_mode(const MultiIndex& k, const Point& t) {
  double phase = 0.0;
  for (int i = 0; i < 3; ++i) phase += static_cast<double>(k[i]) * t[i];
  // reduce before multiplying by 2 pi; keeps large |k| accurate
  phase -= std::floor(phase);
  return std::polar(1.0, kTwoPi * phase);
}

MultiIndex negate(const MultiIndex& k) { return {-k[0], -k[1], -k[2]}; }
MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
MultiIndex subtract(const MultiIndex& a, const MultiIndex& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Window uniform_window(int dim, int w) {
  Window out{0, 0, 0};
  for (int i = 0; i < dim; ++i) out[i] = w;
  return out;
}

// ---------------------------------------------------------------------------
// GridFunction

GridFunction::GridFunction(std::vector<int> dims, std::vector<cd> samples)
    : dims_(std::move(dims)), samples_(std::move(samples)) {
  if (dims_.empty() || static_cast<int>(dims_.size()) > Tolerances::max_torus_dim)
    throw InvalidArgument("grid dimension must be 1, 2 or 3");
  std::size_t total = 1;
  for (int n : dims_) {
    if (n < Tolerances::min_grid || (n & (n - 1)) != 0)
      throw InvalidArgument("grid size " + std::to_string(n) +
                            " is not a power of two >= 8");
    total *= static_cast<std::size_t>(n);
  }
  if (samples_.size() != total)
    throw InvalidArgument("sample count does not match grid dims");
  for (const cd& s : samples_)
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      throw InvalidArgument("grid sample is not finite");
}

GridFunction GridFunction::constant(std::vector<int> dims, cd value) {
  std::size_t total = 1;
  for (int n : dims) total *= static_cast<std::size_t>(std::max(n, 0));
  return GridFunction(std::move(dims), std::vector<cd>(total, value));
}

GridFunction GridFunction::from_function(
    std::vector<int> dims, const std::function<cd(const Point&)>& fn) {
  GridFunction g = constant(dims, 0.0);
  for (std::size_t i = 0; i < g.samples_.size(); ++i)
    g.samples_[i] = fn(g.point(i));
  // re-validate finiteness
  return GridFunction(g.dims_, std::move(g.samples_));
}

Point GridFunction::point(std::size_t flat) const {
  Point p{0.0, 0.0, 0.0};
  for (int i = dim() - 1; i >= 0; --i) {
    const auto n = static_cast<std::size_t>(dims_[i]);
    p[i] = static_cast<double>(flat % n) / static_cast<double>(n);
    flat /= n;
  }
  return p;
}

cd GridFunction::mean() const {
  cd acc = std::accumulate(samples_.begin(), samples_.end(), cd(0.0));
  return acc / static_cast<double>(samples_.size());
}

double GridFunction::max_relative_imag() const {
  double worst = 0.0;
  for (const cd& s : samples_)
    worst = std::max(worst, std::abs(s.imag()) / std::max(1.0, std::abs(s.real())));
  return worst;
}

GridFunction GridFunction::conj() const {
  return transformed([](cd z) { return std::conj(z); });
}

GridFunction operator*(const GridFunction& a, const GridFunction& b) {
  if (a.dims() != b.dims()) throw InvalidArgument("grid dims differ");
  std::vector<cd> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
  return GridFunction(a.dims(), std::move(out));
}

Window nyquist_window(const std::vector<int>& dims) {
  Window w{0, 0, 0};
  for (std::size_t i = 0; i < dims.size() && i < 3; ++i) w[i] = dims[i] / 2 - 1;
  return w;
}

namespace {

void check_window(const Window& window, const std::vector<int>& dims) {
  const Window nyq = nyquist_window(dims);
  for (int i = 0; i < 3; ++i) {
    if (window[i] < 0) throw InvalidArgument("negative window bound");
    if (window[i] > nyq[i]) {
      std::ostringstream os;
      os << "axis " << i << " bound " << window[i] << " exceeds " << nyq[i];
      throw AliasingError(os.str());
    }
  }
}

// Calls fn(k) for every k in the window box of the first `dim` axes.
template <class F>
void for_each_in_box(int dim, const Window& w, F&& fn) {
  MultiIndex k{0, 0, 0};
  for (int i = 0; i < dim; ++i) k[i] = -w[i];
  while (true) {
    fn(k);
    int axis = dim - 1;
    while (axis >= 0) {
      if (++k[axis] <= w[axis]) break;
      k[axis] = -w[axis];
      --axis;
    }
    if (axis < 0) break;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FourierCoeffs

FourierCoeffs::FourierCoeffs(int dim) : dim_(dim) {
  if (dim < 1 || dim > Tolerances::max_torus_dim)
    throw InvalidArgument("coefficient table dimension must be 1, 2 or 3");
}

FourierCoeffs FourierCoeffs::monomial(int dim, const MultiIndex& k, cd value) {
  FourierCoeffs c(dim);
  c.set(k, value);
  return c;
}

FourierCoeffs FourierCoeffs::from_1d(const std::vector<cd>& values, int offset) {
  FourierCoeffs c(1);
  for (std::size_t i = 0; i < values.size(); ++i)
    c.set({offset + static_cast<int>(i), 0, 0}, values[i]);
  return c;
}

FourierCoeffs FourierCoeffs::from_entries(
    int dim, const std::vector<std::pair<MultiIndex, cd>>& entries) {
  FourierCoeffs c(dim);
  for (const auto& [k, v] : entries) c.set(k, v);
  return c;
}

void FourierCoeffs::check_index(const MultiIndex& k) const {
  for (int i = dim_; i < 3; ++i)
    if (k[i] != 0) throw InvalidArgument("index has coordinates past the table dimension");
}

cd FourierCoeffs::at(const MultiIndex& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? cd(0.0) : it->second;
}

void FourierCoeffs::set(const MultiIndex& k, cd value) {
  check_index(k);
  entries_[k] = value;
  for (int i = 0; i < dim_; ++i) window_[i] = std::max(window_[i], std::abs(k[i]));
  conj_symmetric_ = false;
}

void FourierCoeffs::add_to(const MultiIndex& k, cd value) { set(k, at(k) + value); }

int FourierCoeffs::max_extent() const {
  return *std::max_element(window_.begin(), window_.end());
}

FourierCoeffs FourierCoeffs::pruned(double threshold) const {
  FourierCoeffs out(dim_);
  for (const auto& [k, v] : entries_)
    if (std::abs(v) > threshold) out.set(k, v);
  return out;
}

void FourierCoeffs::mark_conj_symmetric() {
  for (const auto& [k, v] : entries_) {
    if (std::abs(at(negate(k)) - std::conj(v)) > Tolerances::conj_symmetry)
      throw InvalidArgument("coefficient table is not conjugate-symmetric");
  }
  conj_symmetric_ = true;
}

cd FourierCoeffs::evaluate(const Point& t) const {
  cd acc = 0.0;
  for (const auto& [k, v] : entries_) acc += v * exp_mode(k, t);
  return acc;
}

// ---------------------------------------------------------------------------
// analysis / synthesis

FourierCoeffs analyze(const GridFunction& g, const Window& window) {
  check_window(window, g.dims());
  const auto spectrum = detail::dft(g.samples(), g.dims(), -1);
  const double scale = 1.0 / static_cast<double>(g.size());
  FourierCoeffs out(g.dim());
  for_each_in_box(g.dim(), window, [&](const MultiIndex& k) {
    out.set(k, spectrum[detail::bin_offset(g.dims(), k.data())] * scale);
  });
  return out;
}

GridFunction synthesize(const FourierCoeffs& c, const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) != c.dim())
    throw InvalidArgument("coefficient dimension does not match grid");
  check_window(c.window(), dims);
  GridFunction zero = GridFunction::constant(dims, 0.0);
  std::vector<cd> bins(zero.size(), cd(0.0));
  for (const auto& [k, v] : c.entries()) bins[detail::bin_offset(dims, k.data())] += v;
  return GridFunction(dims, detail::dft(bins, dims, +1));
}

// ---------------------------------------------------------------------------
// CircleMeasure

CircleMeasure::CircleMeasure(GridFunction density, std::vector<Atom> atoms,
                             std::optional<bool> positive)
    : density_(std::move(density)), atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (int a = 0; a < 3; ++a) {
      double& t = atoms_[i].position[a];
      if (a >= dim()) {
        if (t != 0.0) throw InvalidArgument("atom position has extra coordinates");
        continue;
      }
      t -= std::floor(t);
    }
    if (!std::isfinite(atoms_[i].mass.real()) || !std::isfinite(atoms_[i].mass.imag()))
      throw InvalidArgument("atom mass is not finite");
    for (std::size_t j = 0; j < i; ++j)
      if (atoms_[i].position == atoms_[j].position)
        throw InvalidArgument("atom positions must be pairwise distinct");
  }

  bool nonneg = density_.max_relative_imag() <= Tolerances::real_density;
  for (const cd& s : density_.samples())
    if (s.real() < 0.0) nonneg = false;
  for (const Atom& a : atoms_)
    if (a.mass.imag() != 0.0 || a.mass.real() < 0.0) nonneg = false;

  if (positive.has_value()) {
    if (*positive && !nonneg)
      throw InvalidArgument("measure flagged positive has a negative or complex part");
    positive_ = *positive;
  } else {
    positive_ = nonneg;
  }
  if (positive_) density_ = density_.transformed([](cd z) { return cd(z.real(), 0.0); });

  density_zero_ = std::all_of(density_.samples().begin(), density_.samples().end(),
                              [](cd z) { return z == cd(0.0); });
  spectrum_ = detail::dft(density_.samples(), density_.dims(), -1);
  const double scale = 1.0 / static_cast<double>(density_.size());
  for (cd& z : spectrum_) z *= scale;
}

CircleMeasure CircleMeasure::lebesgue(std::vector<int> dims) {
  return CircleMeasure(GridFunction::constant(std::move(dims), 1.0));
}

cd CircleMeasure::density_coefficient(const MultiIndex& k) const {
  const Window nyq = nyquist_window(density_.dims());
  for (int i = 0; i < 3; ++i) {
    if (i >= dim() && k[i] != 0)
      throw InvalidArgument("index has coordinates past the measure dimension");
    if (std::abs(k[i]) > nyq[i]) {
      if (density_zero_) return 0.0;
      throw AliasingError("moment index beyond grid Nyquist window");
    }
  }
  return spectrum_[detail::bin_offset(density_.dims(), k.data())];
}

CircleMeasure CircleMeasure::absolutely_continuous_part() const {
  return CircleMeasure(density_, {}, positive_);
}

cd moment(const CircleMeasure& mu, const MultiIndex& k) {
  cd acc = mu.density_coefficient(k);
  for (const Atom& a : mu.atoms()) acc += a.mass * std::conj(exp_mode(k, a.position));
  return acc;
}

FourierCoeffs moment_coeffs(const CircleMeasure& mu, const Window& window) {
  FourierCoeffs out(mu.dim());
  for_each_in_box(mu.dim(), window, [&](const MultiIndex& k) { out.set(k, moment(mu, k)); });
  if (mu.positive()) out.mark_conj_symmetric();
  return out;
}

cd inner_product_mu(const FourierCoeffs& p, const FourierCoeffs& q,
                    const CircleMeasure& mu) {
  if (p.dim() != mu.dim() || q.dim() != mu.dim())
    throw InvalidArgument("function and measure dimensions differ");
  // (e_a, e_b)_mu = mu-hat(b - a)
  cd acc = 0.0;
  for (const auto& [a, pa] : p.entries()) {
    if (pa == cd(0.0)) continue;
    for (const auto& [b, qb] : q.entries()) {
      if (qb == cd(0.0)) continue;
      acc += pa * std::conj(qb) * moment(mu, subtract(b, a));
    }
  }
  return acc;
}

}  // namespace szego
