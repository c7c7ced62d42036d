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

#include "ffft/ifs_core.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ffft/errors.hpp"

namespace ffft {
namespace {

void check_translations(const std::vector<IntVector>& translations, std::size_t dim, const char* what) {
  if (translations.size() < 2) throw ValidationError(std::string(what) + ": at least two maps are required");
  for (std::size_t j = 0; j < translations.size(); ++j) {
    if (translations[j].size() != dim)
      throw ValidationError(std::string(what) + ": translation " + std::to_string(j) + " has length " +
                            std::to_string(translations[j].size()) + ", expected " + std::to_string(dim));
  }
  if (!is_zero(translations[0])) throw ValidationError(std::string(what) + ": translation 0 must be the zero vector");
}

double operator_two_norm(const RationalMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c).convert_to<double>();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

void check_index(std::size_t j, std::size_t base, std::size_t length) {
  if (base < 2) throw RangeError("digit base must be at least 2");
  if (length < 1) throw RangeError("digit length must be at least 1");
  const std::size_t count = point_count(base, length, static_cast<std::size_t>(-1));
  if (j >= count)
    throw RangeError("index " + std::to_string(j) + " out of range [0, " + std::to_string(count) + ")");
}

}  // namespace

std::string_view to_string(Kind kind) { return kind == Kind::spatial ? "spatial" : "frequency"; }

std::string_view to_string(Ordering ordering) { return ordering == Ordering::obverse ? "obverse" : "reverse"; }

Kind parse_kind(std::string_view text) {
  if (text == "spatial") return Kind::spatial;
  if (text == "frequency") return Kind::frequency;
  throw ValidationError("unknown point kind '" + std::string(text) + "'");
}

Ordering parse_ordering(std::string_view text) {
  if (text == "obverse") return Ordering::obverse;
  if (text == "reverse") return Ordering::reverse;
  throw ValidationError("unknown ordering '" + std::string(text) + "'");
}

SpatialIfs::SpatialIfs(IntMatrix a_inverse, std::vector<IntVector> translations)
    : a_inverse_(std::move(a_inverse)), translations_(std::move(translations)) {
  if (!a_inverse_.square() || a_inverse_.rows() == 0)
    throw ValidationError("A^-1 must be a non-empty square matrix");
  check_translations(translations_, dim(), "spatial system");
  det_a_inverse_ = determinant(a_inverse_);
  if (det_a_inverse_ == 0) throw ValidationError("A^-1 is singular");
  a_ = inverse(to_rational(a_inverse_));
  a_norm_ = operator_two_norm(a_);
  if (!is_contraction())
    warnings_.push_back("||A||_2 = " + std::to_string(a_norm_) + " >= 1: the spatial maps are not contractions");
}

RationalVector SpatialIfs::apply(std::size_t j, const RationalVector& x) const {
  if (j >= branch_count()) throw RangeError("spatial map index out of range");
  if (x.size() != dim()) throw ShapeError("spatial map argument has the wrong dimension");
  return multiply(a_, add(x, to_rational(translations_[j])));
}

FrequencyIfs::FrequencyIfs(IntMatrix b_matrix, std::vector<IntVector> translations)
    : b_matrix_(std::move(b_matrix)), translations_(std::move(translations)) {
  if (!b_matrix_.square() || b_matrix_.rows() == 0) throw ValidationError("B must be a non-empty square matrix");
  check_translations(translations_, dim(), "frequency system");
}

FrequencyIfs FrequencyIfs::dual_of(const SpatialIfs& spatial, std::vector<IntVector> translations) {
  return FrequencyIfs(transpose(spatial.a_inverse()), std::move(translations));
}

IntVector FrequencyIfs::apply(std::size_t j, const IntVector& x) const {
  if (j >= branch_count()) throw RangeError("frequency map index out of range");
  return add(multiply(b_matrix_, x), translations_[j]);
}

RationalVector FrequencyIfs::apply(std::size_t j, const RationalVector& x) const {
  if (j >= branch_count()) throw RangeError("frequency map index out of range");
  return add(multiply(to_rational(b_matrix_), x), to_rational(translations_[j]));
}

IfsPair::IfsPair(SpatialIfs spatial, FrequencyIfs frequency)
    : spatial_(std::move(spatial)), frequency_(std::move(frequency)) {
  if (spatial_.dim() != frequency_.dim())
    throw ValidationError("spatial and frequency systems have different dimensions");
  if (spatial_.branch_count() != frequency_.branch_count())
    throw ValidationError("spatial and frequency systems have different branch counts");
  if (!(frequency_.b_matrix() == transpose(spatial_.a_inverse())))
    throw ValidationError("frequency matrix B does not equal (A^T)^-1");
}

std::size_t point_count(std::size_t base, std::size_t length, std::size_t max_points) {
  std::size_t count = 1;
  for (std::size_t n = 0; n < length; ++n) {
    if (base != 0 && count > max_points / base)
      throw ResourceError(std::to_string(base) + "^" + std::to_string(length) + " points exceeds the cap of " +
                          std::to_string(max_points));
    count *= base;
  }
  return count;
}

std::vector<std::size_t> base_digits(std::size_t j, std::size_t base, std::size_t length) {
  check_index(j, base, length);
  std::vector<std::size_t> digits(length);
  for (std::size_t n = 0; n < length; ++n) {
    digits[n] = j % base;
    j /= base;
  }
  return digits;
}

std::size_t digit_reverse(std::size_t j, std::size_t base, std::size_t length) {
  check_index(j, base, length);
  std::size_t out = 0;
  for (std::size_t n = 0; n < length; ++n) {
    out = out * base + j % base;
    j /= base;
  }
  return out;
}

RationalVector apply_composition(const IfsPair& ifs, Kind kind, Ordering ordering, std::size_t j,
                                 std::size_t level, const RationalVector& x) {
  const auto digits = base_digits(j, ifs.branch_count(), level);
  if (x.size() != ifs.dim()) throw ShapeError("composition argument has the wrong dimension");
  // Maps are applied innermost first: j_{N-1} for obverse, j_0 for reverse.
  RationalVector point = x;
  for (std::size_t step = 0; step < level; ++step) {
    const std::size_t digit = ordering == Ordering::obverse ? digits[level - 1 - step] : digits[step];
    point = kind == Kind::spatial ? ifs.spatial().apply(digit, point) : ifs.frequency().apply(digit, point);
  }
  return point;
}

RationalVector orbit_point(const IfsPair& ifs, Kind kind, Ordering ordering, std::size_t j, std::size_t level) {
  return apply_composition(ifs, kind, ordering, j, level, RationalVector(ifs.dim(), Rational(0)));
}

OrderedPointSet generate_point_set(const IfsPair& ifs, Kind kind, Ordering ordering, std::size_t level,
                                   std::size_t max_points) {
  if (level < 1) throw RangeError("level must be at least 1");
  const std::size_t k = ifs.branch_count();
  const std::size_t total = point_count(k, level, max_points);
  const std::size_t d = ifs.dim();

  // Level n is built from level n-1 by the top-digit split j = l K^{n-1} + q:
  //   obverse:  P_n[j] = P_{n-1}[q] + A^n b_l        (spatial)
  //             P_n[j] = P_{n-1}[q] + B^{n-1} c_l    (frequency)
  //   reverse:  P_n[j] = A P_{n-1}[q] + A b_l        (spatial)
  //             P_n[j] = B P_{n-1}[q] + c_l          (frequency)
  OrderedPointSet set;
  set.level = level;
  set.ordering = ordering;
  set.kind = kind;

  if (kind == Kind::frequency) {
    const IntMatrix& b = ifs.frequency().b_matrix();
    const auto& c = ifs.frequency().translations();
    std::vector<IntVector> current(1, IntVector(d, Integer(0)));
    IntMatrix b_power = IntMatrix::identity(d);  // B^{n-1}
    for (std::size_t n = 1; n <= level; ++n) {
      std::vector<IntVector> next;
      next.reserve(current.size() * k);
      for (std::size_t l = 0; l < k; ++l) {
        const IntVector shift = ordering == Ordering::obverse ? multiply(b_power, c[l]) : c[l];
        for (const auto& prev : current)
          next.push_back(add(ordering == Ordering::obverse ? prev : multiply(b, prev), shift));
      }
      current = std::move(next);
      b_power = multiply(b_power, b);
    }
    set.points.reserve(total);
    for (const auto& p : current) set.points.push_back(to_rational(p));
  } else {
    const RationalMatrix& a = ifs.spatial().a();
    const auto& bs = ifs.spatial().translations();
    std::vector<RationalVector> current(1, RationalVector(d, Rational(0)));
    RationalMatrix a_power = a;  // A^n
    for (std::size_t n = 1; n <= level; ++n) {
      std::vector<RationalVector> next;
      next.reserve(current.size() * k);
      for (std::size_t l = 0; l < k; ++l) {
        const RationalVector shift = multiply(ordering == Ordering::obverse ? a_power : a, bs[l]);
        for (const auto& prev : current)
          next.push_back(add(ordering == Ordering::obverse ? prev : multiply(a, prev), shift));
      }
      current = std::move(next);
      a_power = multiply(a_power, a);
    }
    set.points = std::move(current);
  }

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return set.points[x] < set.points[y]; });
  for (std::size_t i = 1; i < total; ++i) {
    if (set.points[order[i]] == set.points[order[i - 1]]) {
      set.has_duplicates = true;
      break;
    }
  }
  return set;
}

ComplexVector digit_reversal_permute(std::span<const Complex> v, std::size_t base, std::size_t length) {
  const std::size_t count = point_count(base, length, static_cast<std::size_t>(-1));
  if (v.size() != count)
    throw ShapeError("permutation input has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(count));
  ComplexVector out(count);
  for (std::size_t m = 0; m < count; ++m) out[m] = v[digit_reverse(m, base, length)];
  return out;
}

}  // namespace ffft
