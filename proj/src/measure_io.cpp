// src/measure_io.cpp

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

#include "szego/measure_io.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "szego/errors.hpp"

namespace szego {

using nlohmann::json;

namespace {

double number_param(const json& params, const char* key, double fallback,
                    const std::string& preset) {
  if (!params.contains(key)) return fallback;
  const json& v = params.at(key);
  if (!v.is_number())
    throw InvalidArgument("preset '" + preset + "': param '" + key + "' must be a number");
  return v.get<double>();
}

double required_param(const json& params, const char* key, const std::string& preset) {
  if (!params.contains(key))
    throw InvalidArgument("preset '" + preset + "': missing param '" + key + "'");
  return number_param(params, key, 0.0, preset);
}

cd complex_from_json(const json& v, const std::string& field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw InvalidArgument("field '" + field + "': expected number or [re, im]");
}

cd poly_at(const std::vector<cd>& coeffs, double t) {
  cd acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    acc += coeffs[k] * exp_mode({static_cast<int>(k), 0, 0}, {t, 0.0, 0.0});
  return acc;
}

using Profile = std::function<cd(double)>;

// 1-D profile of a preset plus the axis it reads.
std::pair<Profile, int> one_d_profile(const json& preset) {
  if (!preset.is_object() || !preset.contains("preset") || !preset["preset"].is_string())
    throw InvalidArgument("density: expected {\"preset\": name, \"params\": {...}}");
  const std::string name = preset["preset"].get<std::string>();
  const json params = preset.value("params", json::object());
  if (!params.is_object()) throw InvalidArgument("preset '" + name + "': params must be an object");
  const int axis = static_cast<int>(number_param(params, "axis", 0.0, name));

  if (name == "const") {
    const double c = number_param(params, "c", 1.0, name);
    return {[c](double) { return cd(c); }, axis};
  }
  if (name == "cos_offset") {
    const double a = required_param(params, "a", name);
    const double b = required_param(params, "b", name);
    return {[a, b](double t) { return cd(a + b * std::cos(kTwoPi * t)); }, axis};
  }
  if (name == "exp_cos") {
    const double a = required_param(params, "a", name);
    return {[a](double t) { return cd(std::exp(a * std::cos(kTwoPi * t))); }, axis};
  }
  if (name == "poly_mod2") {
    if (!params.contains("coeffs")) throw InvalidArgument("preset 'poly_mod2': missing param 'coeffs'");
    auto coeffs = complex_list_from_json(params["coeffs"]);
    return {[coeffs](double t) { return cd(std::norm(poly_at(coeffs, t))); }, axis};
  }
  if (name == "indicator") {
    const double c = number_param(params, "c", 1.0, name);
    const double lo = required_param(params, "alpha", name);
    const double hi = required_param(params, "beta", name);
    return {[c, lo, hi](double t) { return cd(t >= lo && t < hi ? c : 0.0); }, axis};
  }
  if (name == "cross_poly") {
    if (!params.contains("phi") || !params.contains("psi"))
      throw InvalidArgument("preset 'cross_poly': needs params 'phi' and 'psi'");
    auto phi = complex_list_from_json(params["phi"]);
    auto psi = complex_list_from_json(params["psi"]);
    return {[phi, psi](double t) { return poly_at(psi, t) * std::conj(poly_at(phi, t)); }, axis};
  }
  throw InvalidArgument("unknown preset '" + name + "'");
}

}  // namespace

std::vector<cd> complex_list_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("coefficient list must be an array");
  std::vector<cd> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(complex_from_json(j[i], "coeffs[" + std::to_string(i) + "]"));
  return out;
}

int preset_dimension(const json& preset) {
  const std::string name = preset.value("preset", std::string());
  const json params = preset.value("params", json::object());
  if (name == "product") return static_cast<int>(params.value("factors", json::array()).size());
  if (params.contains("axis") && params["axis"].is_number_integer())
    return params["axis"].get<int>() + 1;
  return 1;
}

GridFunction density_from_preset(const json& preset, const std::vector<int>& dims) {
  if (!preset.is_object()) throw InvalidArgument("density preset must be an object");
  const int d = static_cast<int>(dims.size());
  if (preset.value("preset", std::string()) == "product") {
    const json params = preset.value("params", json::object());
    if (!params.contains("factors") || !params["factors"].is_array())
      throw InvalidArgument("preset 'product': missing param 'factors'");
    const json& factors = params["factors"];
    if (static_cast<int>(factors.size()) != d)
      throw InvalidArgument("preset 'product': need one factor per grid axis");
    std::vector<Profile> profiles;
    for (const json& f : factors) {
      if (f.value("preset", std::string()) == "product")
        throw InvalidArgument("preset 'product': factors must be 1-D presets");
      profiles.push_back(one_d_profile(f).first);
    }
    return GridFunction::from_function(dims, [&](const Point& x) {
      cd acc = 1.0;
      for (int i = 0; i < d; ++i) acc *= profiles[i](x[i]);
      return acc;
    });
  }
  auto [profile, axis] = one_d_profile(preset);
  if (axis < 0 || axis >= d)
    throw InvalidArgument("preset param 'axis' out of range for a " + std::to_string(d) + "-D grid");
  return GridFunction::from_function(dims, [&, ax = axis](const Point& x) { return profile(x[ax]); });
}

LoadedMeasure measure_from_json(const json& doc, std::optional<int> grid) {
  if (!doc.is_object()) throw InvalidArgument("measure document must be a JSON object");
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty())
    throw InvalidArgument("field 'dims': expected a nonempty array of grid sizes");
  std::vector<int> dims;
  for (const json& n : doc["dims"]) {
    if (!n.is_number_integer()) throw InvalidArgument("field 'dims': entries must be integers");
    dims.push_back(grid.value_or(n.get<int>()));
  }
  if (!doc.contains("density")) throw InvalidArgument("field 'density' is missing");
  const json& dens = doc["density"];

  std::optional<GridFunction> density;
  std::optional<std::pair<FourierCoeffs, FourierCoeffs>> factors;
  if (dens.contains("samples")) {
    if (grid) throw InvalidArgument("field 'density.samples': grid override not allowed with explicit samples");
    const json& s = dens["samples"];
    if (!s.is_array()) throw InvalidArgument("field 'density.samples' must be an array");
    std::vector<cd> samples;
    for (std::size_t i = 0; i < s.size(); ++i)
      samples.push_back(complex_from_json(s[i], "density.samples[" + std::to_string(i) + "]"));
    density.emplace(dims, std::move(samples));
  } else {
    density.emplace(density_from_preset(dens, dims));
    if (dens.value("preset", std::string()) == "cross_poly") {
      const json& p = dens["params"];
      factors.emplace(FourierCoeffs::from_1d(complex_list_from_json(p["phi"])),
                      FourierCoeffs::from_1d(complex_list_from_json(p["psi"])));
    }
  }

  std::vector<Atom> atoms;
  if (doc.contains("atoms")) {
    if (!doc["atoms"].is_array()) throw InvalidArgument("field 'atoms' must be an array");
    for (std::size_t i = 0; i < doc["atoms"].size(); ++i) {
      const json& a = doc["atoms"][i];
      const std::string field = "atoms[" + std::to_string(i) + "]";
      if (!a.contains("t") || !a.contains("mass"))
        throw InvalidArgument("field '" + field + "': needs 't' and 'mass'");
      Atom atom;
      const json& t = a["t"];
      if (t.is_number()) {
        atom.position[0] = t.get<double>();
      } else if (t.is_array() && t.size() == dims.size()) {
        for (std::size_t k = 0; k < t.size(); ++k) atom.position[k] = t[k].get<double>();
      } else {
        throw InvalidArgument("field '" + field + ".t': expected one coordinate per axis");
      }
      atom.mass = complex_from_json(a["mass"], field + ".mass");
      atoms.push_back(atom);
    }
  }
  std::optional<bool> positive;
  if (doc.contains("positive")) positive = doc["positive"].get<bool>();
  return {CircleMeasure(std::move(*density), std::move(atoms), positive), std::move(factors)};
}

json parse_preset_shorthand(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return json::parse(text);
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("preset JSON: ") + e.what());
    }
  }
  json out;
  const auto colon = text.find(':');
  out["preset"] = text.substr(0, colon);
  json params = json::object();
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidArgument("preset param '" + item + "' lacks '='");
      const std::string key = item.substr(0, eq);
      const std::string val = item.substr(eq + 1);
      auto to_number = [&](const std::string& s) {
        try {
          std::size_t used = 0;
          double v = std::stod(s, &used);
          if (used != s.size()) throw std::invalid_argument(s);
          return v;
        } catch (const std::exception&) {
          throw InvalidArgument("preset param '" + key + "': '" + s + "' is not a number");
        }
      };
      if (val.find(';') != std::string::npos || key == "coeffs" || key == "phi" || key == "psi") {
        json list = json::array();
        std::stringstream vs(val);
        std::string part;
        while (std::getline(vs, part, ';')) list.push_back(to_number(part));
        params[key] = list;
      } else if (key == "axis") {
        params[key] = static_cast<int>(to_number(val));
      } else {
        params[key] = to_number(val);
      }
    }
  }
  out["params"] = params;
  return out;
}

}  // namespace szego
