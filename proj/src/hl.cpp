// src/hl.cpp

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

#include "szego/hl.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fft.hpp"
#include "szego/config.hpp"
#include "szego/errors.hpp"
#include "szego/outer.hpp"

namespace szego {

namespace {

Membership lex_sign(const MultiIndex& k, int dim) {
  for (int i = 0; i < dim; ++i) {
    if (k[i] > 0) return Membership::positive;
    if (k[i] < 0) return Membership::negative;
  }
  return Membership::zero;
}

bool is_origin(const MultiIndex& k) { return k[0] == 0 && k[1] == 0 && k[2] == 0; }

// Centered frequency in (-N/2, N/2] of a row-major bin.
MultiIndex bin_frequency(const std::vector<int>& dims, std::size_t flat) {
  MultiIndex k{0, 0, 0};
  for (int a = static_cast<int>(dims.size()) - 1; a >= 0; --a) {
    const auto n = static_cast<std::size_t>(dims[a]);
    const int i = static_cast<int>(flat % n);
    flat /= n;
    k[a] = i > dims[a] / 2 ? i - dims[a] : i;
  }
  return k;
}

MultiIndex centered_negation(const std::vector<int>& dims, const MultiIndex& k) {
  MultiIndex m{0, 0, 0};
  for (std::size_t a = 0; a < dims.size(); ++a) {
    m[a] = -k[a];
    if (m[a] == -dims[a] / 2) m[a] = dims[a] / 2;
  }
  return m;
}

// Calls fn(k) for every k in [-r, r]^dim.
template <class F>
void for_each_in_cube(int dim, int r, F&& fn) {
  MultiIndex k{0, 0, 0};
  for (int i = 0; i < dim; ++i) k[i] = -r;
  while (true) {
    fn(k);
    int a = dim - 1;
    while (a >= 0 && k[a] == r) k[a--] = -r;
    if (a < 0) return;
    ++k[a];
  }
}

cd coeff_inner(const FourierCoeffs& a, const FourierCoeffs& b) {
  cd acc = 0.0;
  for (const auto& [k, v] : a.entries()) acc += v * std::conj(b.at(k));
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// HalfSpaceOrder

HalfSpaceOrder::HalfSpaceOrder(int dim, Kind kind, std::vector<double> direction)
    : dim_(dim), kind_(kind), direction_(std::move(direction)) {
  if (dim_ < 1 || dim_ > Tolerances::max_torus_dim)
    throw InvalidArgument("order dimension must be 1.." + std::to_string(Tolerances::max_torus_dim));
}

HalfSpaceOrder HalfSpaceOrder::lexicographic(int dim) { return {dim, Kind::lexicographic, {}}; }

HalfSpaceOrder HalfSpaceOrder::linear_form(std::vector<double> direction) {
  const int dim = static_cast<int>(direction.size());
  bool nonzero = false;
  for (double x : direction) {
    if (!std::isfinite(x)) throw InvalidArgument("order direction must be finite");
    nonzero = nonzero || x != 0.0;
  }
  if (!nonzero) throw InvalidArgument("order direction must be nonzero");
  return {dim, Kind::linear_form, std::move(direction)};
}

Membership HalfSpaceOrder::membership(const MultiIndex& k) const {
  if (kind_ == Kind::lexicographic) return lex_sign(k, dim_);
  double dot = 0.0, scale = 0.0;
  for (int i = 0; i < dim_; ++i) {
    dot += k[i] * direction_[static_cast<std::size_t>(i)];
    scale += std::abs(k[i] * direction_[static_cast<std::size_t>(i)]);
  }
  // points on the hyperplane (up to rounding) are ordered lexicographically
  if (std::abs(dot) <= 1e-12 * scale) return lex_sign(k, dim_);
  return dot > 0.0 ? Membership::positive : Membership::negative;
}

bool HalfSpaceOrder::is_archimedean() const {
  if (dim_ == 1) return true;
  if (kind_ == Kind::lexicographic) return false;
  for (double x : direction_)
    if (x == 0.0) return false;
  // search for an integer relation k.x = 0 with small coefficients
  const int radius = dim_ == 2 ? 1000 : 100;
  const double pivot = direction_.back();
  double norm = 0.0;
  for (double x : direction_) norm += std::abs(x);
  bool relation = false;
  for_each_in_cube(dim_ - 1, radius, [&](const MultiIndex& k) {
    if (relation || is_origin(k)) return;
    double partial = 0.0, size = 0.0;
    for (int i = 0; i < dim_ - 1; ++i) {
      partial += k[i] * direction_[static_cast<std::size_t>(i)];
      size = std::max(size, static_cast<double>(std::abs(k[i])));
    }
    const double last = std::round(-partial / pivot);
    size = std::max(size, std::abs(last));
    if (std::abs(partial + last * pivot) <= 1e-12 * size * norm) relation = true;
  });
  return !relation;
}

std::string HalfSpaceOrder::check_axioms(int radius) const {
  auto name = [](const MultiIndex& k) {
    std::ostringstream os;
    os << '(' << k[0] << ',' << k[1] << ',' << k[2] << ')';
    return os.str();
  };
  std::vector<MultiIndex> positive;
  std::string failure;
  for_each_in_cube(dim_, radius, [&](const MultiIndex& k) {
    if (!failure.empty()) return;
    const Membership a = membership(k), b = membership(negate(k));
    if (is_origin(k)) {
      if (a != Membership::zero) failure = "origin is not zero";
      return;
    }
    if (a == Membership::zero) failure = "nonzero index " + name(k) + " classified as zero";
    else if (a == b) failure = "index " + name(k) + " and its negative share a side";
    else if (a == Membership::positive) positive.push_back(k);
  });
  if (!failure.empty()) return failure;
  for (const auto& k : positive)
    for (const auto& l : positive)
      if (!in_S(add(k, l))) return "S + S not in S at " + name(k) + " + " + name(l);
  return {};
}

HalfSpaceOrder order_from_json(const nlohmann::json& j, int dim) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidArgument("order: expected {\"kind\": \"lex\" | \"form\", ...}");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "lex") return HalfSpaceOrder::lexicographic(dim);
  if (kind != "form") throw InvalidArgument("order.kind: unknown kind '" + kind + "'");
  if (!j.contains("direction") || !j["direction"].is_array())
    throw InvalidArgument("order.direction: required for kind 'form'");
  std::vector<double> x;
  for (const auto& v : j["direction"]) {
    if (!v.is_number()) throw InvalidArgument("order.direction: entries must be numbers");
    x.push_back(v.get<double>());
  }
  if (static_cast<int>(x.size()) != dim)
    throw InvalidArgument("order.direction: length must equal the dimension " + std::to_string(dim));
  return HalfSpaceOrder::linear_form(std::move(x));
}

nlohmann::json order_to_json(const HalfSpaceOrder& order) {
  if (order.kind() == HalfSpaceOrder::Kind::lexicographic) return {{"kind", "lex"}};
  return {{"kind", "form"}, {"direction", order.direction()}};
}

HalfSpaceOrder parse_order(const std::string& text, int dim) {
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(std::string("order: ") + e.what());
    }
    return order_from_json(j, dim);
  }
  if (text == "lex") return HalfSpaceOrder::lexicographic(dim);
  if (text.rfind("form:", 0) != 0) throw InvalidArgument("order: expected 'lex' or 'form:x1,x2,...'");
  nlohmann::json j{{"kind", "form"}, {"direction", nlohmann::json::array()}};
  std::stringstream ss(text.substr(5));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidArgument("order.direction: bad number '" + item + "'");
    j["direction"].push_back(v);
  }
  return order_from_json(j, dim);
}

// ---------------------------------------------------------------------------
// Spectral factors and projections

SpectralFactor hd_spectral_factor(const GridFunction& w, const HalfSpaceOrder& order, int window) {
  if (order.dim() != w.dim()) throw InvalidArgument("order and weight dimensions differ");
  const auto& dims = w.dims();
  const int d = w.dim();
  Window win{0, 0, 0};
  for (int a = 0; a < d; ++a) {
    win[a] = window < 0 ? dims[a] / 4 : window;
    if (win[a] > dims[a] / 2 - 1) throw AliasingError("spectral factor window beyond Nyquist");
  }

  if (w.max_relative_imag() > Tolerances::real_density) throw InvalidArgument("density not real");
  bool nonpositive = false;
  for (const cd& s : w.samples()) nonpositive = nonpositive || !(s.real() > 0.0);
  const double gm = nonpositive ? 0.0 : geometric_mean(w);
  if (gm == 0.0) {
    FourierCoeffs zero(d);
    zero.set({0, 0, 0}, 0.0);
    return {std::move(zero), 0.0, GridFunction::constant(dims, 0.0), 0.0, 0.0};
  }

  std::vector<cd> logs(w.size());
  for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = std::log(w[i].real());
  const std::vector<cd> spec = detail::dft(logs, dims, -1);
  const double scale = 1.0 / static_cast<double>(w.size());

  // g^(0)/2 + sum_{k in S} g^(k) e_k. Bins pair k with -k; a pair split by S
  // goes wholly to its S member, a pair the grid cannot split is halved.
  std::vector<cd> half(spec.size(), 0.0);
  for (std::size_t b = 0; b < spec.size(); ++b) {
    const cd c = spec[b] * scale;
    const MultiIndex k = bin_frequency(dims, b);
    const MultiIndex mk = centered_negation(dims, k);
    if (is_origin(k) || detail::bin_offset(dims, mk.data()) == b) {
      half[b] = 0.5 * c;
      continue;
    }
    const bool ks = order.in_S(k), ms = order.in_S(mk);
    half[b] = ks == ms ? 0.5 * c : (ks ? c : cd(0.0));
  }
  std::vector<cd> boundary = detail::dft(half, dims, +1);
  for (cd& z : boundary) z = std::exp(z);

  const std::vector<cd> phi_spec = detail::dft(boundary, dims, -1);
  SpectralFactor out{FourierCoeffs(d), gm, GridFunction(dims, boundary), 0.0, 0.0};
  for (std::size_t b = 0; b < phi_spec.size(); ++b) {
    const cd v = phi_spec[b] * scale;
    const MultiIndex k = bin_frequency(dims, b);
    if (order.in_minus_S(k)) {
      out.leak_max = std::max(out.leak_max, std::abs(v));
      continue;
    }
    bool inside = true;
    for (int a = 0; a < d; ++a) inside = inside && std::abs(k[a]) <= win[a];
    if (inside)
      out.coeffs.set(k, v);
    else
      out.dropped_max = std::max(out.dropped_max, std::abs(v));
  }
  // phi^(0) = exp(mean log w / 2) is real; drop the rounding residue
  const double c0 = out.coeffs.at({0, 0, 0}).real();
  out.coeffs.set({0, 0, 0}, c0);
  if (out.leak_max > Tolerances::spectral_leak * std::max(1.0, c0))
    throw NumericalFailure("window too small: spectral factor leaks onto -S");
  return out;
}

FourierCoeffs hd_project_HL2(const GridFunction& g, const HalfSpaceOrder& order, int window) {
  if (order.dim() != g.dim()) throw InvalidArgument("order and function dimensions differ");
  const Window win = window < 0 ? nyquist_window(g.dims()) : uniform_window(g.dim(), window);
  const FourierCoeffs all = analyze(g, win);
  FourierCoeffs out(g.dim());
  for (const auto& [k, v] : all.entries())
    if (!order.in_minus_S(k)) out.set(k, v);
  return out;
}

std::vector<MultiIndex> hd_sn_indices(const HalfSpaceOrder& order, int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  std::vector<MultiIndex> out;
  for_each_in_cube(order.dim(), m, [&](const MultiIndex& k) {
    if (order.in_minus_S(k)) out.push_back(k);
  });
  auto shell = [](const MultiIndex& k) {
    return std::max({std::abs(k[0]), std::abs(k[1]), std::abs(k[2])});
  };
  // the cube is enumerated in lexicographic order, which the stable sort keeps
  std::stable_sort(out.begin(), out.end(), [&](const MultiIndex& a, const MultiIndex& b) {
    return shell(a) < shell(b);
  });
  return out;
}

IndexedBasis hd_sn_sets(const HalfSpaceOrder& order, int m) {
  return IndexedBasis::exponentials(order.dim(), hd_sn_indices(order, m));
}

cd hd_bordered_ratio(const IndexedBasis& spec_f, const IndexedBasis& spec_g,
                     const HalfSpaceOrder& order, int m, const CircleMeasure& mu) {
  if (spec_f.size() != spec_g.size() || spec_f.empty()) throw InvalidArgument("border size mismatch");
  if (order.dim() != mu.dim()) throw InvalidArgument("order and measure dimensions differ");
  return bordered_ratio(spec_f, spec_g, hd_sn_sets(order, m), mu);
}

LimitMinor hd_limit_matrix(const IndexedBasis& spec_f, const IndexedBasis& spec_g,
                           const SpectralFactor& phi, const SpectralFactor& psi,
                           const HalfSpaceOrder& order) {
  if (spec_f.size() != spec_g.size() || spec_f.empty()) throw InvalidArgument("border size mismatch");
  const auto& dims = phi.grid.dims();
  if (psi.grid.dims() != dims) throw InvalidArgument("spectral factors live on different grids");
  if (order.dim() != phi.grid.dim()) throw InvalidArgument("order and factor dimensions differ");
  const auto r = static_cast<Eigen::Index>(spec_f.size());
  LimitMinor out{Eigen::MatrixXcd::Zero(r, r), 0.0, BorderedSpec{spec_f.items(), spec_g.items()}};
  if (phi.is_zero() || psi.is_zero()) {
    if (order.is_archimedean()) return out;
    throw UnsupportedCase("GM-zero with non-archimedean order: limit not determined by this formula");
  }
  std::vector<FourierCoeffs> big_f, big_g;
  for (const auto& f : spec_f.items())
    big_f.push_back(hd_project_HL2(synthesize(f, dims) * phi.grid.conj(), order));
  for (const auto& g : spec_g.items())
    big_g.push_back(hd_project_HL2(synthesize(g, dims) * psi.grid.conj(), order));
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index k = 0; k < r; ++k)
      out.matrix(j, k) = coeff_inner(big_f[static_cast<std::size_t>(j)], big_g[static_cast<std::size_t>(k)]);
  out.value = logdet_lu(out.matrix).value();
  return out;
}

double inverse_leak(const SpectralFactor& phi, const HalfSpaceOrder& order) {
  if (phi.is_zero()) throw InvalidArgument("zero spectral factor has no inverse");
  const auto& dims = phi.grid.dims();
  std::vector<cd> inv(phi.grid.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / phi.grid[i];
  const std::vector<cd> spec = detail::dft(inv, dims, -1);
  const double scale = 1.0 / static_cast<double>(inv.size());
  double leak = 0.0;
  for (std::size_t b = 0; b < spec.size(); ++b)
    if (order.in_minus_S(bin_frequency(dims, b))) leak = std::max(leak, std::abs(spec[b]) * scale);
  return leak;
}

double uniqueness_residual(const GridFunction& w, const SpectralFactor& phi,
                           const HalfSpaceOrder& order, int m) {
  if (phi.is_zero()) throw InvalidArgument("uniqueness check needs a nonzero factor");
  if (w.dims() != phi.grid.dims()) throw InvalidArgument("weight and factor grids differ");
  const CircleMeasure mu(w, {}, true);
  const std::vector<MultiIndex> idx = hd_sn_indices(order, m);
  const IndexedBasis base = IndexedBasis::exponentials(w.dim(), idx);
  const IndexedBasis one = IndexedBasis::exponentials(w.dim(), {MultiIndex{0, 0, 0}});
  // (q, e_j)_w = 0 for j in S_m with q = 1 - sum_k c_k e_k
  const Eigen::MatrixXcd gram = gram_matrix(base, base, mu);
  const Eigen::VectorXcd rhs = gram_matrix(one, base, mu).row(0).transpose();
  const Eigen::VectorXcd c = gram.transpose().partialPivLu().solve(rhs);
  FourierCoeffs q(w.dim());
  q.set({0, 0, 0}, 1.0);
  for (std::size_t i = 0; i < idx.size(); ++i) q.add_to(idx[i], -c(static_cast<Eigen::Index>(i)));
  const GridFunction wq = w * synthesize(q, w.dims());
  const cd c0 = phi.coeffs.at({0, 0, 0});
  double worst = 0.0;
  for (std::size_t i = 0; i < wq.size(); ++i) worst = std::max(worst, std::abs(wq[i] - c0 * phi.grid[i]));
  return worst;
}

}  // namespace szego
