// tests/test_circle_fn.cpp

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
#include <random>

#include "oracles.hpp"
#include "szego/circle_fn.hpp"
#include "szego/errors.hpp"

using namespace szego;

namespace {

GridFunction cos_offset(int n, double a, double b) {
  return GridFunction::from_function({n}, [=](const Point& t) { return cd(a + b * std::cos(kTwoPi * t[0])); });
}

}  // namespace

TEST(ExpMode, ValuesOnTheCircle) {
  EXPECT_NEAR(std::abs(exp_mode({1, 0, 0}, {0.25, 0, 0}) - cd(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(exp_mode({-2, 0, 0}, {0.25, 0, 0}) - cd(-1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(exp_mode({1, 1, 0}, {0.25, 0.25, 0}) - cd(-1, 0)), 0.0, 1e-15);
  // large k stays accurate
  EXPECT_NEAR(std::abs(exp_mode({1000001, 0, 0}, {0.5, 0, 0}) - cd(-1, 0)), 0.0, 1e-9);
}

TEST(GridFunction, RejectsBadGrids) {
  EXPECT_THROW(GridFunction::constant({12}, 1.0), InvalidArgument);
  EXPECT_THROW(GridFunction::constant({4}, 1.0), InvalidArgument);
  EXPECT_THROW(GridFunction::constant({8, 8, 8, 8}, 1.0), InvalidArgument);
  EXPECT_THROW(GridFunction({8}, std::vector<cd>(7, 1.0)), InvalidArgument);
  std::vector<cd> s(8, 1.0);
  s[3] = cd(std::nan(""), 0.0);
  EXPECT_THROW(GridFunction({8}, s), InvalidArgument);
}

TEST(GridFunction, MeanIsLebesgueIntegral) {
  const GridFunction g = cos_offset(64, 2.0, 1.0);
  EXPECT_NEAR(std::abs(g.mean() - cd(2.0)), 0.0, 1e-15);
  const GridFunction h = GridFunction::from_function({16, 8}, [](const Point& p) {
    return cd(p[0] + 2 * p[1]);
  });
  // grid averages of t are (N - 1) / (2N)
  EXPECT_NEAR(h.mean().real(), 15.0 / 32 + 2 * 7.0 / 16, 1e-14);
}

TEST(Analyze, SingleModeAndAliasing) {
  const GridFunction e3 = GridFunction::from_function({32}, [](const Point& t) {
    return exp_mode({3, 0, 0}, t);
  });
  const FourierCoeffs c = analyze(e3, uniform_window(1, 15));
  for (int k = -15; k <= 15; ++k) EXPECT_NEAR(std::abs(c.at(k) - cd(k == 3 ? 1.0 : 0.0)), 0.0, 1e-14);
  EXPECT_THROW(analyze(e3, uniform_window(1, 16)), AliasingError);
  // AliasingError is an input error
  EXPECT_THROW(analyze(e3, uniform_window(1, 16)), InvalidArgument);
}

TEST(Analyze, MatchesDirectQuadrature) {
  auto f = [](double t) { return cd(std::exp(0.7 * std::cos(kTwoPi * t)), std::sin(kTwoPi * 2 * t)); };
  const GridFunction g = GridFunction::from_function({256}, [&](const Point& p) { return f(p[0]); });
  const FourierCoeffs c = analyze(g, uniform_window(1, 20));
  for (int k = -20; k <= 20; ++k) EXPECT_NEAR(std::abs(c.at(k) - oracle::fourier(f, k, 256)), 0.0, 1e-13);
}

TEST(Synthesize, RoundTripsTrigPolynomials) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  FourierCoeffs c(2);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) c.set({a, b, 0}, cd(gauss(rng), gauss(rng)));
  const GridFunction g = synthesize(c, {16, 16});
  for (std::size_t i = 0; i < g.size(); i += 17)
    EXPECT_NEAR(std::abs(g[i] - c.evaluate(g.point(i))), 0.0, 1e-12);
  const FourierCoeffs back = analyze(g, uniform_window(2, 7));
  for (const auto& [k, v] : back.entries()) EXPECT_NEAR(std::abs(v - c.at(k)), 0.0, 1e-13);
  FourierCoeffs wide(1);
  wide.set({8, 0, 0}, 1.0);
  EXPECT_THROW(synthesize(wide, {16}), AliasingError);
}

TEST(FourierCoeffs, WindowGrowsAndPrunes) {
  FourierCoeffs c(2);
  c.set({2, -5, 0}, 1.0);
  c.set({-1, 1, 0}, 1e-20);
  EXPECT_EQ(c.window()[0], 2);
  EXPECT_EQ(c.window()[1], 5);
  EXPECT_EQ(c.max_extent(), 5);
  EXPECT_EQ(c.pruned(1e-15).entries().size(), 1u);
  EXPECT_THROW(c.set({0, 0, 1}, 1.0), InvalidArgument);
  EXPECT_EQ(c.at({7, 7, 0}), cd(0.0));
}

TEST(FourierCoeffs, ConjugateSymmetryCheck) {
  FourierCoeffs c = FourierCoeffs::from_entries(1, {{{1, 0, 0}, cd(0.5, 0.25)}, {{-1, 0, 0}, cd(0.5, -0.25)}});
  EXPECT_NO_THROW(c.mark_conj_symmetric());
  EXPECT_TRUE(c.conj_symmetric());
  c.set({-1, 0, 0}, cd(0.5, 0.25));
  EXPECT_FALSE(c.conj_symmetric());
  EXPECT_THROW(c.mark_conj_symmetric(), InvalidArgument);
}

TEST(CircleMeasure, LebesgueMoments) {
  const CircleMeasure lam = CircleMeasure::lebesgue({64});
  EXPECT_TRUE(lam.positive());
  for (int k = -10; k <= 10; ++k) EXPECT_NEAR(std::abs(moment(lam, k) - cd(k == 0 ? 1.0 : 0.0)), 0.0, 1e-15);
}

TEST(CircleMeasure, AtomMoments) {
  // unit mass at t = 1/4: mu-hat(k) = e^{-2 pi i k / 4}
  const CircleMeasure dirac(GridFunction::constant({16}, 0.0), {{{0.25, 0, 0}, 1.0}});
  EXPECT_TRUE(dirac.density_is_zero());
  for (int k = -40; k <= 40; k += 7)
    EXPECT_NEAR(std::abs(moment(dirac, k) - std::polar(1.0, -kTwoPi * k / 4.0)), 0.0, 1e-12);
  // atoms at t and t + 1 coincide
  EXPECT_THROW(CircleMeasure(GridFunction::constant({16}, 1.0), {{{0.25, 0, 0}, 1.0}, {{1.25, 0, 0}, 1.0}}),
               InvalidArgument);
}

TEST(CircleMeasure, PositivityDetection) {
  EXPECT_TRUE(CircleMeasure(cos_offset(32, 2, 1)).positive());
  EXPECT_FALSE(CircleMeasure(cos_offset(32, 0.5, 1)).positive());
  EXPECT_THROW(CircleMeasure(cos_offset(32, 0.5, 1), {}, true), InvalidArgument);
  EXPECT_FALSE(CircleMeasure(cos_offset(32, 2, 1), {}, false).positive());
  EXPECT_FALSE(CircleMeasure(cos_offset(32, 2, 1), {{{0.1, 0, 0}, cd(0, 1)}}).positive());
}

TEST(CircleMeasure, NyquistGuard) {
  const CircleMeasure mu(cos_offset(32, 2, 1));
  EXPECT_NO_THROW(moment(mu, 15));
  EXPECT_THROW(moment(mu, 16), AliasingError);
  const FourierCoeffs m = moment_coeffs(mu, uniform_window(1, 15));
  EXPECT_TRUE(m.conj_symmetric());
  EXPECT_NEAR(std::abs(m.at(1) - cd(0.5)), 0.0, 1e-15);
}

// (e_a, e_b)_mu = mu-hat(b - a), on random pairs and a mixed measure.
TEST(CircleMeasure, InnerProductOfExponentialsIsMoment) {
  const CircleMeasure mu(cos_offset(64, 3, 1), {{{1.0 / 3, 0, 0}, 0.3}});
  auto direct = [](int a, int b) {
    // integral of e_a conj(e_b) (3 + cos) + 0.3 e_{a-b}(1/3)
    const cd ac = oracle::integrate([&](double t) {
      return std::polar(1.0, 2 * oracle::kPi * (a - b) * t) * (3 + std::cos(2 * oracle::kPi * t));
    }, 64);
    return ac + 0.3 * std::polar(1.0, 2 * oracle::kPi * (a - b) / 3.0);
  };
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(-12, 12);
  for (int trial = 0; trial < 50; ++trial) {
    const int a = pick(rng), b = pick(rng);
    const cd ip = inner_product_mu(FourierCoeffs::monomial(1, {a, 0, 0}), FourierCoeffs::monomial(1, {b, 0, 0}), mu);
    EXPECT_NEAR(std::abs(ip - moment(mu, b - a)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(ip - direct(a, b)), 0.0, 1e-12);
  }
}

TEST(CircleMeasure, InnerProductIsSesquilinear) {
  const CircleMeasure mu(cos_offset(64, 3, 1));
  const FourierCoeffs p = FourierCoeffs::from_1d({cd(1, 2), cd(0, -1), 0.5}, -1);
  const FourierCoeffs q = FourierCoeffs::from_1d({cd(0.3, 0), cd(2, 1)});
  const cd pq = inner_product_mu(p, q, mu), qp = inner_product_mu(q, p, mu);
  EXPECT_NEAR(std::abs(pq - std::conj(qp)), 0.0, 1e-14);
  EXPECT_GT(inner_product_mu(p, p, mu).real(), 0.0);
}
