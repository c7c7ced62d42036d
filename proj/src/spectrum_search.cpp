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

#include "ffft/spectrum_search.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ffft/errors.hpp"

namespace ffft {
namespace {

constexpr double kOrthogonalityTolerance = 1e-9;

// adj(B) x mod |det B|; equal keys <=> congruent vectors.
class CosetKey {
 public:
  explicit CosetKey(const IntMatrix& b_matrix) : det_(abs(determinant(b_matrix))) {
    if (det_ == 0) throw ValidationError("B is singular; Z^d / B Z^d is infinite");
    RationalMatrix inv = inverse(to_rational(b_matrix));
    adjugate_ = IntMatrix(inv.rows(), inv.cols());
    for (std::size_t r = 0; r < inv.rows(); ++r)
      for (std::size_t c = 0; c < inv.cols(); ++c) {
        const Rational scaled = inv(r, c) * Rational(det_);
        adjugate_(r, c) = boost::multiprecision::numerator(scaled);
      }
  }

  const Integer& index() const { return det_; }

  IntVector operator()(const IntVector& x) const {
    IntVector key = multiply(adjugate_, x);
    for (auto& v : key) {
      v %= det_;
      if (v < 0) v += det_;
    }
    return key;
  }

 private:
  Integer det_;
  IntMatrix adjugate_;
};

ComplexVector character_row(const SpatialIfs& spatial, const IntVector& x) {
  ComplexVector row;
  for (const auto& b : spatial.translations()) row.push_back(unit_phasor(mod1(dot(x, multiply(spatial.a(), b)))));
  return row;
}

Complex inner_product(const ComplexVector& x, const ComplexVector& y) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

// Leading (rows.size()) x (rows.size()) minor of the stacked rows.
double leading_minor(const std::vector<const ComplexVector*>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = (*rows[r])[c];
  return std::abs(m.fullPivLu().determinant());
}

std::vector<IntVector> box_points(std::size_t dim, long bound) {
  std::vector<IntVector> points;
  std::vector<long> x(dim, -bound);
  while (true) {
    IntVector v;
    for (long xi : x) v.emplace_back(xi);
    points.push_back(std::move(v));
    std::size_t i = 0;
    while (i < dim && x[i] == bound) x[i++] = -bound;
    if (i == dim) break;
    ++x[i];
  }
  auto shell = [](const IntVector& v) {
    Integer m = 0;
    for (const auto& c : v) m = std::max(m, Integer(abs(c)));
    return m;
  };
  std::stable_sort(points.begin(), points.end(), [&](const IntVector& a, const IntVector& b) {
    const Integer sa = shell(a), sb = shell(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return points;
}

bool builds_as(const SpatialIfs& spatial, const std::vector<IntVector>& c, M1Class target) {
  try {
    build_system(spatial, FrequencyIfs::dual_of(spatial, c), target);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

// Depth-first search for K-1 mutually orthogonal rows, each orthogonal to
// the all-ones row of c_0 = 0. Candidates are tried in order.
bool extend_clique(const std::vector<ComplexVector>& rows, std::size_t start, std::size_t needed,
                   std::vector<std::size_t>& chosen) {
  if (needed == 0) return true;
  for (std::size_t i = start; i < rows.size(); ++i) {
    bool ok = true;
    for (std::size_t c : chosen)
      if (std::abs(inner_product(rows[i], rows[c])) > kOrthogonalityTolerance) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(i);
    if (extend_clique(rows, i + 1, needed - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool congruent(const IntMatrix& b_matrix, const IntVector& x, const IntVector& y) {
  IntVector diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return is_integral(multiply(inverse(to_rational(b_matrix)), diff));
}

CosetSystem coset_representatives(const IntMatrix& b_matrix, std::size_t max_cosets) {
  if (!b_matrix.square() || b_matrix.rows() == 0) throw ValidationError("B must be a non-empty square matrix");
  const CosetKey key(b_matrix);
  if (key.index() > max_cosets)
    throw ResourceError("|det B| = " + key.index().str() + " exceeds the coset cap of " + std::to_string(max_cosets));
  const auto count = key.index().convert_to<std::size_t>();
  const std::size_t dim = b_matrix.rows();

  CosetSystem out;
  out.b_matrix = b_matrix;
  std::set<IntVector> seen;
  // L Z^d lies inside B Z^d for L = |det B|, so the box meets every coset.
  std::vector<std::size_t> x(dim, 0);
  while (out.representatives.size() < count) {
    IntVector v;
    for (auto xi : x) v.emplace_back(xi);
    if (seen.insert(key(v)).second) out.representatives.push_back(std::move(v));
    std::size_t i = 0;
    while (i < dim && x[i] + 1 == count) x[i++] = 0;
    if (i == dim) break;
    ++x[i];
  }
  return out;
}

ComplexMatrix character_matrix(const SpatialIfs& spatial, const CosetSystem& cosets) {
  const std::size_t k = spatial.branch_count();
  ComplexMatrix m(cosets.representatives.size(), k);
  for (std::size_t r = 0; r < cosets.representatives.size(); ++r) {
    if (cosets.representatives[r].size() != spatial.dim()) throw ShapeError("coset representative dimension mismatch");
    const ComplexVector row = character_row(spatial, cosets.representatives[r]);
    for (std::size_t c = 0; c < k; ++c) m(r, c) = row[c];
  }
  return m;
}

SearchResult search_frequencies(const SpatialIfs& spatial, M1Class target, long search_bound,
                                std::size_t max_cosets) {
  if (search_bound < 1) throw ValidationError("search bound must be at least 1");
  const std::size_t k = spatial.branch_count();
  const std::size_t dim = spatial.dim();
  const IntMatrix b_matrix = transpose(spatial.a_inverse());

  SearchResult result;
  result.hypothesis_holds = true;
  std::vector<RationalVector> ab;
  for (const auto& b : spatial.translations()) ab.push_back(multiply(spatial.a(), b));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = j + 1; i < k; ++i) {
      RationalVector diff(dim);
      for (std::size_t t = 0; t < dim; ++t) diff[t] = ab[j][t] - ab[i][t];
      if (is_integral(diff)) {
        result.hypothesis_holds = false;
        result.warnings.push_back("A b_" + std::to_string(j) + " - A b_" + std::to_string(i) +
                                  " is integral; an invertible M1 may not exist");
      }
    }

  // Greedy pivoting over the character matrix, c_0 = 0 first.
  const CosetSystem cosets = coset_representatives(b_matrix, max_cosets);
  std::vector<ComplexVector> rows;
  for (const auto& x : cosets.representatives) rows.push_back(character_row(spatial, x));
  std::vector<std::size_t> picked{0};
  std::vector<char> used(rows.size(), 0);
  used[0] = 1;
  bool greedy_ok = true;
  for (std::size_t step = 1; step < k && greedy_ok; ++step) {
    double best = 0.0;
    std::size_t best_index = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      std::vector<const ComplexVector*> stacked;
      for (std::size_t p : picked) stacked.push_back(&rows[p]);
      stacked.push_back(&rows[r]);
      const double minor = leading_minor(stacked);
      if (minor > best + 1e-12) {
        best = minor;
        best_index = r;
      }
    }
    if (best_index == rows.size() || best <= 1e-9) {
      greedy_ok = false;
      break;
    }
    picked.push_back(best_index);
    used[best_index] = 1;
  }

  std::vector<IntVector> candidate;
  if (greedy_ok) {
    for (std::size_t p : picked) candidate.push_back(cosets.representatives[p]);
    if (builds_as(spatial, candidate, target)) result.translations = candidate;
  }

  if (!result.translations && target == M1Class::hadamard) {
    std::vector<IntVector> points;
    std::vector<ComplexVector> point_rows;
    const CosetKey key(b_matrix);
    std::set<IntVector> seen{key(IntVector(dim, Integer(0)))};
    for (auto& x : box_points(dim, search_bound)) {
      if (!seen.insert(key(x)).second) continue;
      ComplexVector row = character_row(spatial, x);
      Complex total = 0.0;
      for (const auto& z : row) total += z;
      if (std::abs(total) > kOrthogonalityTolerance) continue;
      points.push_back(std::move(x));
      point_rows.push_back(std::move(row));
    }
    std::vector<std::size_t> chosen;
    if (extend_clique(point_rows, 0, k - 1, chosen)) {
      std::vector<IntVector> c{IntVector(dim, Integer(0))};
      for (std::size_t i : chosen) c.push_back(points[i]);
      if (builds_as(spatial, c, M1Class::hadamard)) result.translations = std::move(c);
    }
    if (!result.translations)
      result.failure = "search bound exhausted: no Hadamard choice of c with |c|_inf <= " +
                       std::to_string(search_bound);
  } else if (!result.translations) {
    result.failure = "no invertible M1 among the coset representatives of Z^d / B Z^d";
  }

  if (result.translations) {
    const auto& c = *result.translations;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (congruent(b_matrix, c[i], c[j])) result.coset_equivalences.emplace_back(i, j);
  }
  return result;
}

}  // namespace ffft
