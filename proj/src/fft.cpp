// src/fft.cpp

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

#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace szego::detail {

namespace {
// FFTW's planner is not re-entrant; fftw_execute on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in,
                                      const std::vector<int>& dims, int sign) {
  std::vector<std::complex<double>> buf(in);
  std::vector<std::complex<double>> out(in.size());
  auto* ib = reinterpret_cast<fftw_complex*>(buf.data());
  auto* ob = reinterpret_cast<fftw_complex*>(out.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), ib, ob,
                         sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                         FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::size_t bin_offset(const std::vector<int>& dims, const int* k) {
  std::size_t off = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int n = dims[i];
    const int b = ((k[i] % n) + n) % n;
    off = off * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
  }
  return off;
}

}  // namespace szego::detail
