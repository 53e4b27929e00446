// include/szego/errors.hpp

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

#ifndef SZEGO_ERRORS_HPP_
#define SZEGO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace szego {

/// Bad input: violated precondition, malformed data, Nyquist violation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a window would read Fourier coefficients past the grid's
/// Nyquist limit.
class AliasingError : public InvalidArgument {
 public:
  AliasingError() : InvalidArgument("aliasing window") {}
  explicit AliasingError(const std::string& what)
      : InvalidArgument("aliasing window: " + what) {}
};

/// A computation failed for numerical reasons (loss of definiteness,
/// singular blocks, leakage).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The inputs are valid but the requested quantity is not determined by the
/// implemented formulas.
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace szego

#endif  // SZEGO_ERRORS_HPP_
