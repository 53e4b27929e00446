// tests/test_szego_minors.cpp

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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "szego/detkit.hpp"
#include "szego/errors.hpp"
#include "szego/szego_minors.hpp"

using namespace szego;

namespace {

GridFunction sampled(int n, const std::function<double(double)>& f) {
  return GridFunction::from_function({n}, [&](const Point& t) { return cd(f(t[0])); });
}

double two_plus_cos(double t) { return 2 + std::cos(kTwoPi * t); }
double poly_half(double t) { return std::norm(1.0 - 0.5 * std::polar(1.0, kTwoPi * t)); }
double exp_cos(double t) { return std::exp(0.8 * std::cos(kTwoPi * t)); }

FourierCoeffs poly(std::vector<cd> c) { return FourierCoeffs::from_1d(c); }

// Brute-force int P(f conj phi) conj(P(g conj phi)) by direct quadrature of
// the Fourier coefficients of the products, no FFT.
cd projection_oracle(const std::function<cd(double)>& f, const std::function<cd(double)>& g,
                     const std::function<cd(double)>& phi, int kmax) {
  cd acc = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    const cd a = oracle::fourier([&](double t) { return f(t) * std::conj(phi(t)); }, k, 2048);
    const cd b = oracle::fourier([&](double t) { return g(t) * std::conj(phi(t)); }, k, 2048);
    acc += a * std::conj(b);
  }
  return acc;
}

}  // namespace

TEST(ProjectH2, Examples) {
  const GridFunction em3 = GridFunction::from_function({32}, [](const Point& t) { return exp_mode({-3, 0, 0}, t); });
  for (const auto& [k, v] : project_H2(em3, 15).entries()) EXPECT_NEAR(std::abs(v), 0.0, 1e-15) << k[0];
  const GridFunction e2 = GridFunction::from_function({32}, [](const Point& t) { return exp_mode({2, 0, 0}, t); });
  const FourierCoeffs p2 = project_H2(e2, 15);
  for (int k = 0; k <= 15; ++k) EXPECT_NEAR(std::abs(p2.at(k) - cd(k == 2 ? 1.0 : 0.0)), 0.0, 1e-15);
  EXPECT_EQ(p2.at(-2), cd(0.0));
  const FourierCoeffs pc = project_H2(sampled(32, two_plus_cos), 15);
  EXPECT_NEAR(std::abs(pc.at(0) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(pc.at(1) - 0.5), 0.0, 1e-15);
  EXPECT_EQ(pc.at(-1), cd(0.0));
  EXPECT_THROW(project_H2(e2, 16), AliasingError);
}

TEST(LimitMatrix, Examples) {
  const OuterFactor one = outer_factor(GridFunction::constant({64}, 1.0));
  const LimitMinor m1 = limit_matrix(BorderedSpec::exponentials({0}), one, one);
  EXPECT_NEAR(std::abs(m1.value - 1.0), 0.0, 1e-14);

  const OuterFactor phi = outer_factor(sampled(512, two_plus_cos));
  EXPECT_NEAR(std::abs(limit_matrix(BorderedSpec::exponentials({0}), phi, phi).value - oracle::gm_cos_offset(2, 1)),
              0.0, 1e-12);

  const OuterFactor ph = outer_factor(sampled(256, poly_half));
  EXPECT_NEAR(std::abs(limit_matrix(BorderedSpec::exponentials({1}), ph, ph).value - 1.25), 0.0, 1e-12);
}

TEST(LimitMatrix, MatchesProjectionOracle) {
  const OuterFactor phi = outer_factor(sampled(512, exp_cos));
  // Phi = exp(0.4 z) for this weight
  auto phi_t = [](double t) { return std::exp(0.4 * std::polar(1.0, 2 * oracle::kPi * t)); };
  BorderedSpec spec;
  spec.f_list = {poly({1.0, cd(0, 2)}), FourierCoeffs::from_1d({0.5, 0.0, 1.0}, -1)};
  spec.g_list = {FourierCoeffs::monomial(1, {3, 0, 0}), poly({0.0, 1.0, -1.0})};
  const LimitMinor lm = limit_matrix(spec, phi, phi);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k) {
      const FourierCoeffs& f = spec.f_list[j];
      const FourierCoeffs& g = spec.g_list[k];
      const cd expect = projection_oracle([&](double t) { return f.evaluate({t, 0, 0}); },
                                          [&](double t) { return g.evaluate({t, 0, 0}); }, phi_t, 60);
      EXPECT_NEAR(std::abs(lm.matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) - expect), 0.0, 1e-12);
    }
  EXPECT_NEAR(std::abs(lm.value - oracle::det(lm.matrix)), 0.0, 1e-12);
}

TEST(LimitMatrix, ZeroFactorAndErrors) {
  const OuterFactor zero = outer_factor(sampled(64, [](double t) { return t < 0.5 ? 1.0 : 0.0; }));
  const LimitMinor lm = limit_matrix(BorderedSpec::exponentials({0, 1}), zero, zero);
  EXPECT_EQ(lm.value, cd(0.0));
  EXPECT_TRUE(lm.matrix.isZero());
  const OuterFactor one = outer_factor(GridFunction::constant({64}, 1.0));
  BorderedSpec bad = BorderedSpec::exponentials({0, 1});
  bad.g_list.pop_back();
  EXPECT_THROW(limit_matrix(bad, one, one), InvalidArgument);
  EXPECT_THROW(limit_matrix(BorderedSpec::exponentials({40}), one, one), AliasingError);
  EXPECT_THROW(limit_matrix(BorderedSpec::exponentials({0}), one, outer_factor(GridFunction::constant({128}, 1.0))),
               InvalidArgument);
}

TEST(TwForm, Examples) {
  const OuterFactor one = outer_factor(GridFunction::constant({64}, 1.0));
  for (int j = 0; j <= 5; ++j)
    for (int k = 0; k <= 5; ++k) EXPECT_NEAR(std::abs(twform_entry(one, j, k) - cd(j == k ? 1.0 : 0.0)), 0.0, 1e-14);
  const OuterFactor ph = outer_factor(sampled(256, poly_half));
  EXPECT_NEAR(std::abs(twform_entry(ph, 0, 0) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(twform_entry(ph, 0, 1) + 0.5), 0.0, 1e-12);
  // brute-force projection of e_0 conj phi and e_1 conj phi, phi = 1 - z/2
  auto phi_t = [](double t) { return 1.0 - 0.5 * std::polar(1.0, 2 * oracle::kPi * t); };
  const cd brute = projection_oracle([](double) { return cd(1.0); },
                                     [](double t) { return std::polar(1.0, 2 * oracle::kPi * t); }, phi_t, 8);
  EXPECT_NEAR(std::abs(twform_entry(ph, 0, 1) - brute), 0.0, 1e-12);
  EXPECT_THROW(twform_entry(ph, -1, 0), InvalidArgument);
  EXPECT_THROW(twform_entry(ph, 0, ph.window() + 1), InvalidArgument);
}

TEST(TwForm, MatchesLimitMatrixEntries) {
  for (auto f : {two_plus_cos, poly_half, exp_cos}) {
    const OuterFactor phi = outer_factor(sampled(512, f));
    BorderedSpec spec;
    for (int j = 0; j <= 8; ++j) spec.f_list.push_back(FourierCoeffs::monomial(1, {j, 0, 0}));
    spec.g_list = spec.f_list;
    const LimitMinor lm = limit_matrix(spec, phi, phi);
    for (int j = 0; j <= 8; ++j)
      for (int k = 0; k <= 8; ++k) EXPECT_NEAR(std::abs(lm.matrix(j, k) - twform_entry(phi, j, k)), 0.0, 1e-10);
    // coincident borders: Hermitian and positive semidefinite
    EXPECT_LT((lm.matrix - lm.matrix.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(lm.matrix).eigenvalues();
    EXPECT_GE(ev.minCoeff(), -1e-10);
  }
}

TEST(GenFn, Examples) {
  const OuterFactor one = outer_factor(GridFunction::constant({256}, 1.0));
  const auto [l1, r1] = genfn_check(one, cd(0.5, 0.1), cd(-0.2, 0.6));
  EXPECT_NEAR(std::abs(r1 - 1.0 / (1.0 - std::conj(cd(-0.2, 0.6)) * cd(0.5, 0.1))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(l1 - r1), 0.0, 1e-6);
  const OuterFactor phi = outer_factor(sampled(512, two_plus_cos));
  const auto [l0, r0] = genfn_check(phi, 0.0, 0.0);
  EXPECT_NEAR(std::abs(l0 - oracle::gm_cos_offset(2, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r0 - oracle::gm_cos_offset(2, 1)), 0.0, 1e-12);
  const auto [l, r] = genfn_check(phi, 0.3, cd(0, 0.2));
  EXPECT_LT(std::abs(l - r), 1e-6);
  // closed form from the explicit outer factor alpha + beta z
  const auto [alpha, beta] = oracle::outer_two_plus_cos();
  const cd z = 0.3, zeta(0, 0.2);
  EXPECT_NEAR(std::abs(r - (alpha + beta * z) * std::conj(alpha + beta * zeta) / (1.0 - std::conj(zeta) * z)), 0.0,
              1e-10);
  EXPECT_THROW(genfn_check(phi, 0.9, 0.0), InvalidArgument);
}

TEST(GenFn, FiveByFiveGrid) {
  const OuterFactor phi = outer_factor(sampled(1024, two_plus_cos));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const cd z = std::polar(0.2 * a, 1.3 * a + 0.4);
      const cd zeta = std::polar(0.8 - 0.2 * b, -0.9 * b);
      const auto [lhs, rhs] = genfn_check(phi, z, zeta, 64);
      EXPECT_LT(std::abs(lhs - rhs), 1e-6) << "z=" << z << " zeta=" << zeta;
    }
}

TEST(EquivalentForms, AgreeOnSeveralBorders) {
  for (auto f : {two_plus_cos, exp_cos}) {
    const OuterFactor phi = outer_factor(sampled(512, f));
    const std::vector<FourierCoeffs> borders = {
        FourierCoeffs::monomial(1, {0, 0, 0}), FourierCoeffs::monomial(1, {2, 0, 0}),
        FourierCoeffs::from_1d({cd(0.3, -1), 2.0, cd(0, 0.5), 1.0}, -2)};
    for (const auto& fj : borders)
      for (const auto& gk : borders) {
        const auto forms = limit_entry_forms(fj, gk, phi);
        EXPECT_NEAR(std::abs(forms[0] - forms[1]), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(forms[0] - forms[2]), 0.0, 1e-10);
      }
  }
}

TEST(HeadMass, SigmaOneIsExact) {
  const GridFunction w = sampled(256, two_plus_cos);
  EXPECT_NEAR(epsilon_poly_condition(poly({1.0}), w, 12, 50), 1.0, 1e-12);
  EXPECT_NEAR(head_mass_ratio(poly({1.0}), w, {1.0, cd(0, 2), -0.5}), 1.0, 1e-12);
}

TEST(HeadMass, MatchesFourierExpansionForUnitWeight) {
  // w = 1 gives p_k = e_k, so the expansion of sigma*S is its coefficient list
  const GridFunction w = GridFunction::constant({256}, 1.0);
  const std::vector<cd> sigma = {1.0, -0.5};
  const std::vector<cd> s = {cd(0.4, 1), -2.0, cd(0, 0.3), 1.5};
  std::vector<cd> prod(s.size() + 1, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < sigma.size(); ++j) prod[i + j] += s[i] * sigma[j];
  double head = 0, total = 0;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    total += std::norm(prod[i]);
    if (i < s.size()) head += std::norm(prod[i]);
  }
  EXPECT_NEAR(head_mass_ratio(poly(sigma), w, s), head / total, 1e-12);
}

TEST(HeadMass, OuterSigmaStaysBoundedAway) {
  const GridFunction w = GridFunction::constant({256}, 1.0);
  const int n = 16;
  const double eps = epsilon_poly_condition(poly({1.0, -0.5}), w, n, 200);
  EXPECT_GE(eps, 0.5);
  // oracle: smallest generalized eigenvalue of the head and total forms of
  // the convolution by 1 - z/2
  Eigen::MatrixXcd conv = Eigen::MatrixXcd::Zero(n + 2, n + 1);
  for (int j = 0; j <= n; ++j) {
    conv(j, j) = 1.0;
    conv(j + 1, j) = -0.5;
  }
  const Eigen::MatrixXcd head = conv.topRows(n + 1).adjoint() * conv.topRows(n + 1);
  const Eigen::MatrixXcd total = conv.adjoint() * conv;
  const double lo = Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd>(head, total).eigenvalues().minCoeff();
  EXPECT_GE(eps, lo - 1e-12);
  EXPECT_NEAR(eps, lo, 1e-9);
  EXPECT_EQ(eps, epsilon_poly_condition(poly({1.0, -0.5}), w, n, 200));
}

TEST(HeadMass, InnerSigmaDecays) {
  const GridFunction w = GridFunction::constant({256}, 1.0);
  double prev = 1.0;
  for (int n : {2, 4, 8, 16}) {
    const double eps = epsilon_poly_condition(poly({1.0, -2.0}), w, n, 100);
    EXPECT_LT(eps, prev) << "n = " << n;
    prev = eps;
  }
  EXPECT_LT(prev, 1e-6);
  // explicit witness: S = sum_k 2^k z^k makes sigma*S = 1 - 2^{n+1} z^{n+1}
  const int n = 8;
  std::vector<cd> s;
  for (int k = 0; k <= n; ++k) s.push_back(std::pow(2.0, k));
  const double tail = std::pow(4.0, n + 1);
  EXPECT_NEAR(head_mass_ratio(poly({1.0, -2.0}), w, s), 1.0 / (1.0 + tail), 1e-14);
}

TEST(HeadMass, Errors) {
  const GridFunction w = GridFunction::constant({64}, 1.0);
  EXPECT_THROW(epsilon_poly_condition(FourierCoeffs::from_1d({1.0, 1.0}, -1), w, 4, 10), InvalidArgument);
  EXPECT_THROW(epsilon_poly_condition(poly({1.0}), w, -1, 10), InvalidArgument);
  EXPECT_THROW(head_mass_ratio(poly({1.0}), w, {}), InvalidArgument);
  EXPECT_THROW(epsilon_poly_condition(poly({1.0}), sampled(64, [](double t) { return t - 0.5; }), 4, 10),
               InvalidArgument);
}
