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

#ifndef FFFT_FIXTURES_HPP
#define FFFT_FIXTURES_HPP

// Reference systems used by the tests, the acceptance suite and the sample
// configurations.

#include <string>
#include <vector>

#include "ffft/fractal_transform.hpp"

namespace ffft::fixtures {

// [0, 1] with psi_j(x) = (x + j)/2, rho_j(x) = 2x + j: the classical DFT.
FractalSystem dyadic();
// psi_0(x) = x/4, psi_1(x) = (x + 2)/4 with rho_j(x) = 4x + j.
FractalSystem quarter_cantor();
// psi_0(x) = x/3, psi_1(x) = (x + 2)/3 with rho_j(x) = 3x + j; M_1 is
// invertible but never Hadamard.
FractalSystem middle_third();
// A^-1 = 2 I, b = c = {(0,0), (1,0), (0,1)}; det M_1 = 4.
FractalSystem sierpinski();

SpatialIfs middle_third_spatial();
SpatialIfs quarter_cantor_spatial();

struct NamedSystem {
  std::string name;
  FractalSystem system;
};

std::vector<NamedSystem> all();

}  // namespace ffft::fixtures

#endif  // FFFT_FIXTURES_HPP
