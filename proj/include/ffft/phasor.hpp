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

#ifndef FFFT_PHASOR_HPP
#define FFFT_PHASOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ffft/exact.hpp"

namespace ffft {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using ComplexMatrix = Eigen::MatrixXcd;

// e^{-2 pi i theta} for an exact phase theta. Quarter turns are returned
// exactly, so that (for example) the dyadic seed matrix is exactly [[1,1],[1,-1]].
Complex unit_phasor(const Rational& theta);

// e^{-2 pi i num/den}, den > 0.
Complex unit_phasor(std::uint64_t num, std::uint64_t den);

// Infinity norm of a complex vector.
double max_abs(const ComplexVector& v);
double max_abs_diff(const ComplexVector& a, const ComplexVector& b);

}  // namespace ffft

#endif  // FFFT_PHASOR_HPP
