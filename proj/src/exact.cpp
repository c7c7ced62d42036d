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

#include "ffft/exact.hpp"

#include <sstream>
#include <utility>

#include "ffft/errors.hpp"

namespace ffft {
namespace {

template <class T>
Matrix<T> transpose_impl(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

template <class T>
Matrix<T> multiply_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T, class V>
std::vector<T> matvec_impl(const Matrix<T>& a, const std::vector<V>& x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector product: length mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    out[i] = std::move(acc);
  }
  return out;
}

template <class T>
Matrix<T> power_impl(Matrix<T> base, unsigned n) {
  if (!base.square()) throw ShapeError("matrix power of a non-square matrix");
  Matrix<T> result = Matrix<T>::identity(base.rows());
  while (n > 0) {
    if (n & 1u) result = multiply_impl(result, base);
    n >>= 1;
    if (n > 0) base = multiply_impl(base, base);
  }
  return result;
}

template <class T>
std::vector<T> add_impl(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw ShapeError("vector sum: length mismatch");
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

IntVector make_int_vector(std::initializer_list<std::int64_t> values) {
  IntVector v;
  v.reserve(values.size());
  for (auto x : values) v.emplace_back(x);
  return v;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntMatrix transpose(const IntMatrix& m) { return transpose_impl(m); }
RationalMatrix transpose(const RationalMatrix& m) { return transpose_impl(m); }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return multiply_impl(a, b); }
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) { return multiply_impl(a, b); }
IntVector multiply(const IntMatrix& a, const IntVector& x) { return matvec_impl(a, x); }
RationalVector multiply(const RationalMatrix& a, const RationalVector& x) { return matvec_impl(a, x); }
RationalVector multiply(const RationalMatrix& a, const IntVector& x) { return matvec_impl(a, x); }

IntMatrix power(const IntMatrix& m, unsigned n) { return power_impl(m, n); }
RationalMatrix power(const RationalMatrix& m, unsigned n) { return power_impl(m, n); }

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw ValidationError("matrix is singular over the rationals");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Rational scale = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= scale;
      inv(col, c) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

IntVector add(const IntVector& a, const IntVector& b) { return add_impl(a, b); }
RationalVector add(const RationalVector& a, const RationalVector& b) { return add_impl(a, b); }

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot product: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational dot(const IntVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot product: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += b[i] * a[i];
  return acc;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ShapeError("dot product: length mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational mod1(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  Integer rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

bool is_integral(const RationalVector& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

IntVector to_integer(const RationalVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw ValidationError("vector component " + to_string(x) + " is not an integer");
    out.push_back(boost::multiprecision::numerator(x));
  }
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::string to_string(const Rational& r) { return r.str(); }

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ')';
  return os.str();
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ')';
  return os.str();
}

}  // namespace ffft
