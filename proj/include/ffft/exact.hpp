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

#ifndef FFFT_EXACT_HPP
#define FFFT_EXACT_HPP

// Arbitrary-precision integer and rational linear algebra used for orbit
// points and phases. Everything here is exact; nothing rounds.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffft {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
// Components are always in lowest terms with a positive denominator.
using RationalVector = std::vector<Rational>;

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

IntVector make_int_vector(std::initializer_list<std::int64_t> values);

RationalMatrix to_rational(const IntMatrix& m);
RationalVector to_rational(const IntVector& v);

IntMatrix transpose(const IntMatrix& m);
RationalMatrix transpose(const RationalMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& x);
RationalVector multiply(const RationalMatrix& a, const RationalVector& x);
RationalVector multiply(const RationalMatrix& a, const IntVector& x);

IntMatrix power(const IntMatrix& m, unsigned n);
RationalMatrix power(const RationalMatrix& m, unsigned n);

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);

// Gauss-Jordan over Q; throws ValidationError when singular.
RationalMatrix inverse(const RationalMatrix& m);

IntVector add(const IntVector& a, const IntVector& b);
RationalVector add(const RationalVector& a, const RationalVector& b);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const IntVector& a, const RationalVector& b);
Integer dot(const IntVector& a, const IntVector& b);

// Fractional part in [0, 1).
Rational mod1(const Rational& r);

bool is_integral(const Rational& r);
bool is_integral(const RationalVector& v);
// Requires is_integral(v).
IntVector to_integer(const RationalVector& v);
bool is_zero(const IntVector& v);

std::string to_string(const Rational& r);
std::string to_string(const RationalVector& v);
std::string to_string(const IntVector& v);

}  // namespace ffft

#endif  // FFFT_EXACT_HPP
