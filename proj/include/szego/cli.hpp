// include/szego/cli.hpp

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

#ifndef SZEGO_CLI_HPP_
#define SZEGO_CLI_HPP_

// Command-line front end. Every command produces a Table, which is written
// as CSV (header row first, numbers as %.17g) or as JSON:
//
//   {"command": str, "columns": [str, ...], "rows": [[num|str|null, ...], ...],
//    "meta": {...}}
//
// Exit codes: 0 ok, 2 bad input, 3 numerical failure, 4 unsupported case.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace szego::cli {

struct RunConfig {
  std::string command;
  std::string input;    // measure JSON file
  std::string preset;   // preset shorthand, used when input is empty
  std::optional<int> grid;
  std::optional<int> dim;
  std::optional<std::pair<int, int>> n_range;
  std::optional<std::pair<int, int>> m_range;
  std::string border;   // "0,1" on T; "0,0;1,0" on T^d; "rows|cols" for F != G
  std::string order = "lex";
  std::string format = "csv";
  std::string output;
  std::string svg;
  std::string sigma = "1;-0.5";
  std::uint64_t seed = 20021;
  double z = 1.5;
  int trials = 200;
  bool ratios_only = false;
};

struct Series {
  std::string name;
  std::vector<double> x, y;
};

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  nlohmann::json meta = nlohmann::json::object();
  // optional convergence plot
  std::string plot_title, x_label, y_label;
  std::vector<Series> plot;
};

/// "a:b" with a <= b.
std::pair<int, int> parse_range(const std::string& text);
/// Rows and columns of a border; each entry is one multi-index.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
parse_border(const std::string& text, int dim);
/// "1;-0.5" or a JSON list of numbers / [re, im] pairs.
std::vector<std::complex<double>> parse_coefficients(const std::string& text);

Table cmd_gm(const RunConfig& cfg);
Table cmd_dratio(const RunConfig& cfg);
Table cmd_minor(const RunConfig& cfg);
Table cmd_angle(const RunConfig& cfg);
Table cmd_opuc(const RunConfig& cfg);
Table cmd_hd(const RunConfig& cfg);
Table run_command(const RunConfig& cfg);

std::string format_table(const Table& table, const std::string& format);
std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series);

/// Parses argv, runs the command and writes output. Returns the exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace szego::cli

#endif  // SZEGO_CLI_HPP_
