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

#include "ffft/phasor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ffft/errors.hpp"

namespace ffft {
namespace {

// Exact values at multiples of a quarter turn; sincos elsewhere.
Complex phasor_of_fraction(long double fraction, bool quarter, unsigned quarter_index) {
  if (quarter) {
    switch (quarter_index & 3u) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, 1.0};
    }
  }
  const long double angle = 2.0L * std::numbers::pi_v<long double> * fraction;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(-std::sin(angle))};
}

}  // namespace

Complex unit_phasor(const Rational& theta) {
  const Rational reduced = mod1(theta);
  const Integer& num = boost::multiprecision::numerator(reduced);
  const Integer& den = boost::multiprecision::denominator(reduced);
  const Integer four_num = 4 * num;
  const bool quarter = (four_num % den) == 0;
  const unsigned index = quarter ? static_cast<unsigned>(four_num / den) : 0u;
  return phasor_of_fraction(reduced.convert_to<long double>(), quarter, index);
}

Complex unit_phasor(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ValidationError("phase with zero denominator");
  num %= den;
  const unsigned __int128 four_num = static_cast<unsigned __int128>(num) * 4u;
  const bool quarter = (four_num % den) == 0;
  const unsigned index = quarter ? static_cast<unsigned>(four_num / den) : 0u;
  return phasor_of_fraction(static_cast<long double>(num) / static_cast<long double>(den), quarter, index);
}

double max_abs(const ComplexVector& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw ShapeError("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace ffft
