// Copyright 2026 The Fractal FFT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FFFT_ERRORS_HPP
#define FFFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffft {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An index outside [0, K^N).
class RangeError : public Error {
 public:
  using Error::Error;
};

// A vector or matrix whose length does not match the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Inputs that violate a type invariant (singular M1, B != (A^T)^-1, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Floating-point guard failures: singular outer matrices, inverse residuals.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ffft

#endif  // FFFT_ERRORS_HPP
