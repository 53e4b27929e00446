// src/cli.cpp

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

#include "szego/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "szego/angles.hpp"
#include "szego/circle_fn.hpp"
#include "szego/detkit.hpp"
#include "szego/errors.hpp"
#include "szego/hl.hpp"
#include "szego/measure_io.hpp"
#include "szego/opuc.hpp"
#include "szego/outer.hpp"
#include "szego/szego_minors.hpp"

namespace szego::cli {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int to_int(const std::string& s, const std::string& field) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidArgument(field + ": bad integer '" + s + "'");
  return v;
}

double to_double(const std::string& s, const std::string& field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidArgument(field + ": bad number '" + s + "'");
  return v;
}

int default_grid(int dim) { return dim == 1 ? 1024 : dim == 2 ? 64 : 16; }

LoadedMeasure load_measure(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw InvalidArgument("--input: cannot open '" + cfg.input + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InvalidArgument("--input: " + std::string(e.what()));
    }
    return measure_from_json(doc, cfg.grid);
  }
  if (cfg.preset.empty()) throw InvalidArgument("one of --input or --preset is required");
  const json preset = parse_preset_shorthand(cfg.preset);
  const int d = cfg.dim.value_or(preset_dimension(preset));
  if (d < 1 || d > 3) throw InvalidArgument("--dim: must be 1, 2 or 3");
  const json doc{{"dims", std::vector<int>(static_cast<std::size_t>(d), cfg.grid.value_or(default_grid(d)))},
                 {"density", preset}};
  return measure_from_json(doc);
}

void require_dim(const CircleMeasure& mu, int d, const std::string& command) {
  if (mu.dim() != d)
    throw InvalidArgument(command + ": needs a " + std::to_string(d) + "-D measure, got " +
                          std::to_string(mu.dim()) + "-D");
}

std::vector<MultiIndex> to_indices(const std::vector<std::vector<int>>& list) {
  std::vector<MultiIndex> out;
  for (const auto& v : list) {
    MultiIndex k{0, 0, 0};
    for (std::size_t i = 0; i < v.size(); ++i) k[i] = v[i];
    out.push_back(k);
  }
  return out;
}

std::pair<IndexedBasis, IndexedBasis> border_bases(const RunConfig& cfg, int dim) {
  auto [rows, cols] = parse_border(cfg.border, dim);
  return {IndexedBasis::exponentials(dim, to_indices(rows)),
          IndexedBasis::exponentials(dim, to_indices(cols))};
}

// Limit of the bordered ratios on T, or NaN when the measure carries no
// factorization (complex density given by samples).
struct Limit1D {
  std::optional<LimitMinor> minor;
  std::optional<OuterFactor> phi;  // set for positive measures
  std::string note;
};

Limit1D limit_1d(const LoadedMeasure& lm, const IndexedBasis& f, const IndexedBasis& g) {
  const BorderedSpec spec{f.items(), g.items()};
  Limit1D out;
  const CircleMeasure& mu = lm.measure;
  if (mu.positive()) {
    out.phi = outer_factor(mu.density());
    out.minor = limit_matrix(spec, *out.phi, *out.phi);
  } else if (lm.cross_factors) {
    const int n = mu.density().dims()[0];
    const OuterFactor phi = OuterFactor::from_polynomial(lm.cross_factors->first, n);
    const OuterFactor psi = OuterFactor::from_polynomial(lm.cross_factors->second, n);
    out.minor = limit_matrix(spec, phi, psi);
  } else {
    out.note = "complex measure without factor data: limit unavailable";
  }
  return out;
}

double log10_or_nan(double v) { return v > 0.0 ? std::log10(v) : kNaN; }

std::string format_number(const json& v) {
  if (v.is_null()) return "nan";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  const double d = v.get<double>();
  if (std::isnan(d)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

Table make_table(std::string command, std::vector<std::string> columns) {
  Table t;
  t.command = std::move(command);
  t.columns = std::move(columns);
  return t;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw InvalidArgument("range: expected 'a:b', got '" + text + "'");
  const int a = to_int(parts[0], "range"), b = to_int(parts[1], "range");
  if (a > b) throw InvalidArgument("range: '" + text + "' must be increasing");
  return {a, b};
}

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
parse_border(const std::string& text, int dim) {
  auto side = [dim](const std::string& s) {
    std::vector<std::vector<int>> out;
    if (s.empty()) {
      out.emplace_back(static_cast<std::size_t>(dim), 0);
      return out;
    }
    if (dim == 1) {
      for (const auto& item : split(s, ',')) out.push_back({to_int(item, "--border")});
      return out;
    }
    for (const auto& entry : split(s, ';')) {
      std::vector<int> k;
      for (const auto& item : split(entry, ',')) k.push_back(to_int(item, "--border"));
      if (static_cast<int>(k.size()) != dim)
        throw InvalidArgument("--border: entry '" + entry + "' needs " + std::to_string(dim) + " coordinates");
      out.push_back(k);
    }
    return out;
  };
  const auto halves = split(text, '|');
  if (halves.size() > 2) throw InvalidArgument("--border: at most one '|'");
  auto rows = side(halves.empty() ? std::string() : halves[0]);
  auto cols = halves.size() == 2 ? side(halves[1]) : rows;
  if (rows.size() != cols.size()) throw InvalidArgument("--border: row and column lists differ in length");
  return {rows, cols};
}

std::vector<std::complex<double>> parse_coefficients(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    try {
      return complex_list_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw InvalidArgument("--sigma: " + std::string(e.what()));
    }
  }
  std::vector<std::complex<double>> out;
  for (const auto& item : split(text, ';')) out.emplace_back(to_double(item, "--sigma"), 0.0);
  if (out.empty()) throw InvalidArgument("--sigma: empty coefficient list");
  return out;
}

Table cmd_gm(const RunConfig& cfg) {
  const LoadedMeasure lm = load_measure(cfg);
  const GridFunction& dens = lm.measure.density();
  Table t = make_table("gm", {"gm", "phi0_sq", "difference"});
  double gm = 0.0;
  cd c0 = 0.0;
  if (dens.dim() == 1) {
    const OuterFactor phi = outer_factor(dens);
    gm = geometric_mean(dens);
    c0 = phi.coeffs().at(0);
  } else {
    const HalfSpaceOrder order = parse_order(cfg.order, dens.dim());
    const SpectralFactor phi = hd_spectral_factor(dens, order);
    gm = phi.gm;
    c0 = phi.coeffs.at({0, 0, 0});
    t.meta["order"] = order_to_json(order);
  }
  t.rows.push_back({gm, std::norm(c0), std::norm(c0) - gm});
  t.meta["dims"] = dens.dims();
  t.meta["atoms_ignored"] = lm.measure.atoms().size();
  return t;
}

Table cmd_dratio(const RunConfig& cfg) {
  const LoadedMeasure lm = load_measure(cfg);
  require_dim(lm.measure, 1, "dratio");
  const auto [lo, hi] = cfg.n_range.value_or(std::pair{0, 64});
  if (lo < 0) throw InvalidArgument("--n-range: n must be nonnegative");
  const auto [f, g] = border_bases(cfg, 1);
  const Limit1D limit = limit_1d(lm, f, g);
  const cd lim = limit.minor ? limit.minor->value : cd(kNaN, kNaN);

  Table t = make_table("dratio", {"n", "ratio_re", "ratio_im", "error"});
  Series err{"|ratio - limit|", {}, {}};
  for (int n = lo; n <= hi; ++n) {
    const cd r = bordered_ratio(f, g, IndexedBasis::past(n), lm.measure);
    const double e = limit.minor ? std::abs(r - lim) : kNaN;
    t.rows.push_back({n, r.real(), r.imag(), finite_or_null(e)});
    err.x.push_back(n);
    err.y.push_back(log10_or_nan(e));
  }
  t.meta["limit"] = {finite_or_null(lim.real()), finite_or_null(lim.imag())};
  if (!limit.note.empty()) t.meta["note"] = limit.note;
  t.plot_title = "bordered determinant ratio";
  t.x_label = "n";
  t.y_label = "log10 error";
  t.plot.push_back(std::move(err));
  return t;
}

Table cmd_minor(const RunConfig& cfg) {
  const LoadedMeasure lm = load_measure(cfg);
  require_dim(lm.measure, 1, "minor");
  const auto [f, g] = border_bases(cfg, 1);
  const Limit1D limit = limit_1d(lm, f, g);
  if (!limit.minor) throw UnsupportedCase(limit.note);
  const auto [rows, cols] = parse_border(cfg.border, 1);

  Table t = make_table("minor", {"entry", "re", "im", "twform_re", "twform_im"});
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const cd v = limit.minor->matrix(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
      json tw_re = nullptr, tw_im = nullptr;
      const int a = rows[j][0], b = cols[k][0];
      if (limit.phi && !limit.phi->is_zero() && a >= 0 && b >= 0 &&
          std::max(a, b) <= limit.phi->window()) {
        const cd tw = twform_entry(*limit.phi, a, b);
        tw_re = tw.real();
        tw_im = tw.imag();
      }
      t.rows.push_back({"(" + std::to_string(a) + "," + std::to_string(b) + ")", v.real(), v.imag(),
                        tw_re, tw_im});
    }
  const cd det = limit.minor->value;
  t.rows.push_back({"det", det.real(), det.imag(), nullptr, nullptr});
  return t;
}

Table cmd_angle(const RunConfig& cfg) {
  const auto [lo, hi] = cfg.n_range.value_or(std::pair{0, 32});
  if (lo < 0) throw InvalidArgument("--n-range: n must be nonnegative");
  const FourierCoeffs sigma = FourierCoeffs::from_1d(parse_coefficients(cfg.sigma));
  FourierCoeffs phi = FourierCoeffs::from_1d({1.0});
  FourierCoeffs psi = sigma;
  std::optional<GridFunction> weight;
  if (!cfg.input.empty() || !cfg.preset.empty()) {
    const LoadedMeasure lm = load_measure(cfg);
    require_dim(lm.measure, 1, "angle");
    if (lm.cross_factors) {
      phi = lm.cross_factors->first;
      psi = lm.cross_factors->second;
    } else if (lm.measure.positive()) {
      weight = lm.measure.density();
    } else {
      throw InvalidArgument("angle: measure must be a positive weight or a cross_poly preset");
    }
  }
  if (!weight) weight = GridFunction::constant({cfg.grid.value_or(1024)}, 1.0);

  Table t = make_table("angle", {"n", "epsilon", "opnorm", "bound", "head_mass"});
  Series eps{"epsilon", {}, {}}, mass{"head mass", {}, {}};
  for (const auto& row : angle_sweep(phi, psi, lo, hi)) {
    const double hm = epsilon_poly_condition(sigma, *weight, row.n, cfg.trials, cfg.seed);
    t.rows.push_back({row.n, row.epsilon, row.opnorm, finite_or_null(row.bound), hm});
    eps.x.push_back(row.n);
    eps.y.push_back(row.epsilon);
    mass.x.push_back(row.n);
    mass.y.push_back(hm);
  }
  t.meta["seed"] = cfg.seed;
  t.meta["trials"] = cfg.trials;
  t.plot_title = "subspace angle";
  t.x_label = "n";
  t.y_label = "value";
  t.plot = {std::move(eps), std::move(mass)};
  return t;
}

Table cmd_opuc(const RunConfig& cfg) {
  const LoadedMeasure lm = load_measure(cfg);
  require_dim(lm.measure, 1, "opuc");
  if (!lm.measure.atoms().empty()) throw InvalidArgument("opuc: weight must not carry atoms");
  const auto [lo, hi] = cfg.n_range.value_or(std::pair{0, 32});
  if (lo < 0) throw InvalidArgument("--n-range: degrees must be nonnegative");
  const OnpTable table = onp_build(lm.measure.density(), hi);
  Table t = make_table("opuc", {"k", "prediction_error", "szego_error"});
  Series err{"asymptotic error", {}, {}};
  for (int k = lo; k <= hi; ++k) {
    const double e = szego_asymptotic_error(table, cd(cfg.z, 0.0), k);
    t.rows.push_back({k, table.prediction_errors()[static_cast<std::size_t>(k)], e});
    err.x.push_back(k);
    err.y.push_back(log10_or_nan(e));
  }
  t.meta["z"] = cfg.z;
  t.meta["orthonormality_residual"] = table.orthonormality_residual();
  t.meta["recursion_discrepancy"] = table.recursion_discrepancy();
  t.plot_title = "orthonormal polynomial asymptotics";
  t.x_label = "k";
  t.y_label = "log10 error";
  t.plot.push_back(std::move(err));
  return t;
}

Table cmd_hd(const RunConfig& cfg) {
  const LoadedMeasure lm = load_measure(cfg);
  const int d = lm.measure.dim();
  const HalfSpaceOrder order = parse_order(cfg.order, d);
  const auto [lo, hi] = cfg.m_range.value_or(std::pair{1, 6});
  if (lo < 1) throw InvalidArgument("--m-range: m must be at least 1");
  const auto [f, g] = border_bases(cfg, d);

  cd lim(kNaN, kNaN);
  Table t = make_table("hd", {"m", "base_size", "ratio_re", "ratio_im", "error"});
  if (!cfg.ratios_only) {
    if (!lm.measure.positive())
      throw UnsupportedCase("hd: limits for complex measures on T^d are not implemented");
    const SpectralFactor phi = hd_spectral_factor(lm.measure.density(), order);
    lim = hd_limit_matrix(f, g, phi, phi, order).value;
    t.meta["gm"] = phi.gm;
  }
  Series err{"|ratio - limit|", {}, {}};
  for (int m = lo; m <= hi; ++m) {
    const cd r = hd_bordered_ratio(f, g, order, m, lm.measure);
    const double e = std::abs(r - lim);
    t.rows.push_back({m, hd_sn_indices(order, m).size(), r.real(), r.imag(), finite_or_null(e)});
    err.x.push_back(m);
    err.y.push_back(log10_or_nan(e));
  }
  t.meta["order"] = order_to_json(order);
  t.meta["archimedean"] = order.is_archimedean();
  t.meta["limit"] = {finite_or_null(lim.real()), finite_or_null(lim.imag())};
  t.plot_title = "bordered ratio on the torus";
  t.x_label = "m";
  t.y_label = "log10 error";
  t.plot.push_back(std::move(err));
  return t;
}

Table run_command(const RunConfig& cfg) {
  if (cfg.format != "csv" && cfg.format != "json")
    throw InvalidArgument("--format: expected csv or json");
  if (cfg.command == "gm") return cmd_gm(cfg);
  if (cfg.command == "dratio") return cmd_dratio(cfg);
  if (cfg.command == "minor") return cmd_minor(cfg);
  if (cfg.command == "angle") return cmd_angle(cfg);
  if (cfg.command == "opuc") return cmd_opuc(cfg);
  if (cfg.command == "hd") return cmd_hd(cfg);
  throw InvalidArgument("unknown command '" + cfg.command + "'");
}

std::string format_table(const Table& table, const std::string& format) {
  if (format == "json") {
    json j{{"command", table.command}, {"columns", table.columns}, {"rows", json::array()},
           {"meta", table.meta}};
    for (const auto& row : table.rows) {
      json r = json::array();
      for (const auto& v : row)
        r.push_back(v.is_number_float() && !std::isfinite(v.get<double>()) ? json(nullptr) : v);
      j["rows"].push_back(std::move(r));
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
  return os.str();
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toeplitz determinant ratios, outer functions and their limits"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string n_range, m_range;

  const std::vector<std::pair<const char*, const char*>> commands{
      {"gm", "geometric mean and outer-factor check"},
      {"dratio", "bordered determinant ratios against their limit"},
      {"minor", "limiting bordered minor matrix"},
      {"angle", "subspace angles, projection norms and head-mass condition"},
      {"opuc", "orthonormal polynomials and their asymptotics"},
      {"hd", "bordered ratios on the torus for a half-space order"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", cfg.input, "measure JSON file");
    sub->add_option("--preset", cfg.preset, "preset shorthand, e.g. cos_offset:a=2,b=1");
    sub->add_option("--grid", cfg.grid, "grid size per axis");
    sub->add_option("--dim", cfg.dim, "torus dimension for presets");
    sub->add_option("--n-range", n_range, "sweep a:b over n");
    sub->add_option("--m-range", m_range, "sweep a:b over m (hd)");
    sub->add_option("--border", cfg.border, "border indices, e.g. 0,1 or 0,0;1,0 or rows|cols");
    sub->add_option("--order", cfg.order, "lex or form:x1,x2,...");
    sub->add_option("--format", cfg.format, "csv or json");
    sub->add_option("--output", cfg.output, "output file (default stdout)");
    sub->add_option("--svg", cfg.svg, "write a convergence plot");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--sigma", cfg.sigma, "polynomial coefficients, e.g. 1;-0.5");
    sub->add_option("--z", cfg.z, "evaluation point outside the disc (opuc)");
    sub->add_option("--trials", cfg.trials, "random trials for the head-mass estimate");
    sub->add_flag("--ratios-only", cfg.ratios_only, "skip the limit (hd)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    if (!n_range.empty()) cfg.n_range = parse_range(n_range);
    if (!m_range.empty()) cfg.m_range = parse_range(m_range);
    const Table table = run_command(cfg);
    const std::string text = format_table(table, cfg.format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw InvalidArgument("--output: cannot write '" + cfg.output + "'");
      file << text;
    }
    if (!cfg.svg.empty()) {
      std::ofstream file(cfg.svg);
      if (!file) throw InvalidArgument("--svg: cannot write '" + cfg.svg + "'");
      file << render_svg(table.plot_title, table.x_label, table.y_label, table.plot);
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const UnsupportedCase& e) {
    err << "unsupported: " << e.what() << '\n';
    return 4;
  }
  return 0;
}

}  // namespace szego::cli
