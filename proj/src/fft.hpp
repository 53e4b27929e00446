// src/fft.hpp

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

#ifndef SZEGO_SRC_FFT_HPP_
#define SZEGO_SRC_FFT_HPP_

#include <complex>
#include <vector>

namespace szego::detail {

// Unnormalized multi-dimensional DFT over a row-major array.
// sign = -1: out[k] = sum_x in[x] e^{-2 pi i k.x/N}; sign = +1 the inverse
// kernel (still unnormalized).
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in,
                                      const std::vector<int>& dims, int sign);

// Row-major flat offset of the FFT bin holding frequency k.
std::size_t bin_offset(const std::vector<int>& dims, const int* k);

}  // namespace szego::detail

#endif  // SZEGO_SRC_FFT_HPP_
