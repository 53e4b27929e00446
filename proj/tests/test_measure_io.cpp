// tests/test_measure_io.cpp

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

#include "szego/errors.hpp"
#include "szego/measure_io.hpp"

using namespace szego;
using nlohmann::json;

TEST(Presets, OneDimensionalValues) {
  const std::vector<int> dims{16};
  auto at = [&](const json& p, std::size_t i) { return density_from_preset(p, dims)[i]; };
  EXPECT_EQ(at({{"preset", "const"}, {"params", {{"c", 4.0}}}}, 3), cd(4.0));
  EXPECT_NEAR(std::abs(at({{"preset", "cos_offset"}, {"params", {{"a", 2.0}, {"b", 1.0}}}}, 4) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(at({{"preset", "exp_cos"}, {"params", {{"a", 0.5}}}}, 0).real(), std::exp(0.5), 1e-15);
  // |1 - 0.5 e_1|^2 at t = 1/2 is 2.25
  EXPECT_NEAR(at({{"preset", "poly_mod2"}, {"params", {{"coeffs", {1.0, -0.5}}}}}, 8).real(), 2.25, 1e-15);
  const json ind{{"preset", "indicator"}, {"params", {{"alpha", 0.0}, {"beta", 0.5}, {"c", 3.0}}}};
  EXPECT_EQ(at(ind, 7), cd(3.0));
  EXPECT_EQ(at(ind, 8), cd(0.0));
  // psi conj(phi) with phi = 1 - 0.4 z, psi = 1, at t = 1/4: conj(1 - 0.4 i)
  const json cross{{"preset", "cross_poly"}, {"params", {{"phi", {1.0, -0.4}}, {"psi", {1.0}}}}};
  EXPECT_NEAR(std::abs(at(cross, 4) - cd(1.0, 0.4)), 0.0, 1e-15);
}

TEST(Presets, AxisAndProduct) {
  const json along{{"preset", "cos_offset"}, {"params", {{"a", 2.0}, {"b", 1.0}, {"axis", 1}}}};
  EXPECT_EQ(preset_dimension(along), 2);
  const GridFunction g = density_from_preset(along, {8, 8});
  // depends on the second coordinate only
  for (std::size_t i = 0; i < g.size(); ++i)
    EXPECT_NEAR(std::abs(g[i] - cd(2 + std::cos(kTwoPi * g.point(i)[1]))), 0.0, 1e-15);
  EXPECT_THROW(density_from_preset(along, {8}), InvalidArgument);

  const json prod{{"preset", "product"},
                  {"params",
                   {{"factors",
                     {{{"preset", "poly_mod2"}, {"params", {{"coeffs", {1.0, -0.5}}}}},
                      {{"preset", "poly_mod2"}, {"params", {{"coeffs", {1.0, -0.3}}}}}}}}}};
  EXPECT_EQ(preset_dimension(prod), 2);
  const GridFunction p = density_from_preset(prod, {8, 8});
  EXPECT_NEAR(p.mean().real(), 1.25 * 1.09, 1e-14);
  EXPECT_THROW(density_from_preset(prod, {8, 8, 8}), InvalidArgument);
}

TEST(Presets, Errors) {
  EXPECT_THROW(density_from_preset({{"preset", "nope"}}, {8}), InvalidArgument);
  EXPECT_THROW(density_from_preset({{"preset", "cos_offset"}, {"params", {{"a", 1.0}}}}, {8}), InvalidArgument);
  EXPECT_THROW(density_from_preset({{"preset", "cos_offset"}, {"params", {{"a", "x"}, {"b", 1.0}}}}, {8}),
               InvalidArgument);
  EXPECT_THROW(density_from_preset({{"preset", "poly_mod2"}, {"params", json::object()}}, {8}), InvalidArgument);
  EXPECT_THROW(density_from_preset(json::array(), {8}), InvalidArgument);
  try {
    density_from_preset({{"preset", "cos_offset"}, {"params", {{"a", 1.0}}}}, {8});
  } catch (const InvalidArgument& e) {
    // messages name the offending field
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos);
  }
}

TEST(MeasureJson, FullDocument) {
  const json doc = json::parse(R"({
    "dims": [64],
    "density": {"preset": "cos_offset", "params": {"a": 2, "b": 1}},
    "atoms": [{"t": 0.3333333333333333, "mass": 0.3}, {"t": [0.5], "mass": [0.0, 0.1]}]
  })");
  const LoadedMeasure lm = measure_from_json(doc);
  EXPECT_EQ(lm.measure.density().dims(), std::vector<int>{64});
  ASSERT_EQ(lm.measure.atoms().size(), 2u);
  EXPECT_EQ(lm.measure.atoms()[1].mass, cd(0.0, 0.1));
  EXPECT_FALSE(lm.measure.positive());
  EXPECT_FALSE(lm.cross_factors.has_value());
  EXPECT_EQ(measure_from_json(doc, 128).measure.density().dims(), std::vector<int>{128});
}

TEST(MeasureJson, SamplesAndCrossFactors) {
  json doc{{"dims", {8}}, {"density", {{"samples", json::array()}}}};
  for (int i = 0; i < 8; ++i) doc["density"]["samples"].push_back(i % 2 ? json(1.0) : json({2.0, 0.0}));
  const LoadedMeasure lm = measure_from_json(doc);
  EXPECT_NEAR(lm.measure.density().mean().real(), 1.5, 1e-15);
  EXPECT_TRUE(lm.measure.positive());
  EXPECT_THROW(measure_from_json(doc, 16), InvalidArgument);

  const json cross{{"dims", {32}},
                   {"density", {{"preset", "cross_poly"}, {"params", {{"phi", {1.0, -0.4}}, {"psi", {1.0}}}}}}};
  const LoadedMeasure c = measure_from_json(cross);
  ASSERT_TRUE(c.cross_factors.has_value());
  EXPECT_EQ(c.cross_factors->first.at(1), cd(-0.4));
  EXPECT_FALSE(c.measure.positive());
}

TEST(MeasureJson, Errors) {
  EXPECT_THROW(measure_from_json(json::array()), InvalidArgument);
  EXPECT_THROW(measure_from_json({{"density", {{"preset", "const"}}}}), InvalidArgument);
  EXPECT_THROW(measure_from_json({{"dims", {"a"}}, {"density", {{"preset", "const"}}}}), InvalidArgument);
  EXPECT_THROW(measure_from_json({{"dims", {8}}}), InvalidArgument);
  EXPECT_THROW(measure_from_json({{"dims", {8}}, {"density", {{"preset", "const"}}}, {"atoms", {{{"t", 0.1}}}}}),
               InvalidArgument);
  EXPECT_THROW(measure_from_json({{"dims", {8, 8}},
                                  {"density", {{"preset", "const"}}},
                                  {"atoms", {{{"t", {0.1}}, {"mass", 1.0}}}}}),
               InvalidArgument);
  EXPECT_THROW(measure_from_json({{"dims", {8}}, {"density", {{"samples", {1.0, 2.0}}}}}), InvalidArgument);
  EXPECT_THROW(measure_from_json({{"dims", {8}}, {"density", {{"preset", "cos_offset"}, {"params", {{"a", 0.5}, {"b", 1}}}}},
                                  {"positive", true}}),
               InvalidArgument);
}

TEST(Shorthand, Parses) {
  EXPECT_EQ(parse_preset_shorthand("cos_offset:a=2,b=1"),
            json({{"preset", "cos_offset"}, {"params", {{"a", 2.0}, {"b", 1.0}}}}));
  EXPECT_EQ(parse_preset_shorthand("poly_mod2:coeffs=1;-0.5")["params"]["coeffs"], json({1.0, -0.5}));
  EXPECT_EQ(parse_preset_shorthand("poly_mod2:coeffs=1")["params"]["coeffs"], json({1.0}));
  EXPECT_EQ(parse_preset_shorthand("indicator:alpha=0,beta=0.5,axis=1")["params"]["axis"], json(1));
  EXPECT_EQ(parse_preset_shorthand("const")["params"], json::object());
  EXPECT_EQ(parse_preset_shorthand(R"({"preset": "const", "params": {"c": 2}})")["params"]["c"], json(2));
  EXPECT_THROW(parse_preset_shorthand("cos_offset:a"), InvalidArgument);
  EXPECT_THROW(parse_preset_shorthand("cos_offset:a=two"), InvalidArgument);
  EXPECT_THROW(parse_preset_shorthand("{not json"), InvalidArgument);
}

TEST(ComplexList, NumbersAndPairs) {
  const auto v = complex_list_from_json(json::parse("[1, [0, 2], -0.5]"));
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], cd(0, 2));
  EXPECT_THROW(complex_list_from_json(json::parse("[[1, 2, 3]]")), InvalidArgument);
  EXPECT_THROW(complex_list_from_json(json::parse("{}")), InvalidArgument);
}
