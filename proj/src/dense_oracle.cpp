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

#include <algorithm>
#include <cstdint>
#include <limits>

#include "ffft/errors.hpp"
#include "ffft/fractal_transform.hpp"

namespace ffft {
namespace {

// Every entry phase R_j . Psi_k at level N is an integer multiple of
// 1/Q with Q = |det A^-1|^N: Psi_k = A^N z_k with integral z_k, and
// Q (A^N)^T R_j is integral. The phase numerator is w_j . z_k mod Q.
class LatticePhases {
 public:
  LatticePhases(const FractalSystem& system, std::size_t level, const std::vector<RationalVector>& rows,
                const std::vector<RationalVector>& cols) {
    const Integer det = abs(system.spatial().det_a_inverse());
    modulus_ = 1;
    for (std::size_t i = 0; i < level; ++i) modulus_ *= det;

    const auto n = static_cast<unsigned>(level);
    const RationalMatrix a_inv_pow = to_rational(power(system.spatial().a_inverse(), n));
    RationalMatrix scaled = transpose(power(system.spatial().a(), n));
    for (std::size_t r = 0; r < scaled.rows(); ++r)
      for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(r, c) *= Rational(modulus_);

    for (const auto& row : rows) row_weights_.push_back(to_integer(multiply(scaled, row)));
    // to_integer throws if a spatial point is off the lattice A^N Z^d.
    for (const auto& col : cols) col_coords_.push_back(to_integer(multiply(a_inv_pow, col)));

    small_ = modulus_ < (Integer(1) << 31);
    if (small_) {
      q_ = modulus_.convert_to<std::uint64_t>();
      auto reduce = [this](const IntVector& v) {
        std::vector<std::uint64_t> out;
        for (const auto& x : v) {
          Integer r = x % modulus_;
          if (r < 0) r += modulus_;
          out.push_back(r.convert_to<std::uint64_t>());
        }
        return out;
      };
      for (const auto& w : row_weights_) small_rows_.push_back(reduce(w));
      for (const auto& z : col_coords_) small_cols_.push_back(reduce(z));
      if (q_ <= (std::uint64_t{1} << 20)) {
        table_.resize(q_);
        for (std::uint64_t t = 0; t < q_; ++t) table_[t] = unit_phasor(t, q_);
      }
    }
  }

  Complex phasor(std::size_t j, std::size_t k) const {
    if (small_) {
      const auto& w = small_rows_[j];
      const auto& z = small_cols_[k];
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < w.size(); ++i) acc = (acc + (w[i] * z[i]) % q_) % q_;
      return table_.empty() ? unit_phasor(acc, q_) : table_[acc];
    }
    return unit_phasor(Rational(dot(row_weights_[j], col_coords_[k]), modulus_));
  }

 private:
  Integer modulus_;
  std::vector<IntVector> row_weights_;
  std::vector<IntVector> col_coords_;
  bool small_ = false;
  std::uint64_t q_ = 0;
  std::vector<std::vector<std::uint64_t>> small_rows_;
  std::vector<std::vector<std::uint64_t>> small_cols_;
  ComplexVector table_;
};

std::vector<std::vector<Rational>> exact_phases(const std::vector<RationalVector>& rows,
                                                const std::vector<RationalVector>& cols) {
  std::vector<std::vector<Rational>> out(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = 0; k < cols.size(); ++k) out[j][k] = mod1(dot(rows[j], cols[k]));
  return out;
}

void record(double& worst, bool& exact, const Rational& expected, const Rational& actual) {
  if (expected == actual) return;
  exact = false;
  worst = std::max(worst, std::abs(unit_phasor(expected) - unit_phasor(actual)));
}

}  // namespace

ComplexMatrix dense_matrix(const FractalSystem& system, std::size_t level, Ordering ordering, std::size_t max_points) {
  if (level < 1) throw RangeError("level must be at least 1");
  const std::size_t size = point_count(system.branch_count(), level, max_points);
  const auto rows = generate_point_set(system.ifs(), Kind::frequency, ordering, level, max_points);
  const auto cols = generate_point_set(system.ifs(), Kind::spatial, ordering, level, max_points);
  const LatticePhases phases(system, level, rows.points, cols.points);
  ComplexMatrix m(size, size);
  for (std::size_t j = 0; j < size; ++j)
    for (std::size_t k = 0; k < size; ++k) m(j, k) = phases.phasor(j, k);
  return m;
}

double BlockIdentityReport::max_deviation() const {
  return std::max({permutation_deviation, obverse_block_deviation, reverse_block_deviation});
}

BlockIdentityReport verify_block_identities(const FractalSystem& system, std::size_t level, std::size_t max_points) {
  if (level < 1) throw RangeError("level must be at least 1");
  BlockIdentityReport report;
  report.level = level;
  const std::size_t k = system.branch_count();
  const std::size_t size = point_count(k, level, max_points);
  if (level == 1) return report;

  const IfsPair& ifs = system.ifs();
  const auto obverse = exact_phases(generate_point_set(ifs, Kind::frequency, Ordering::obverse, level).points,
                                    generate_point_set(ifs, Kind::spatial, Ordering::obverse, level).points);
  const auto reverse = exact_phases(generate_point_set(ifs, Kind::frequency, Ordering::reverse, level).points,
                                    generate_point_set(ifs, Kind::spatial, Ordering::reverse, level).points);
  const auto obverse_prev =
      exact_phases(generate_point_set(ifs, Kind::frequency, Ordering::obverse, level - 1).points,
                   generate_point_set(ifs, Kind::spatial, Ordering::obverse, level - 1).points);
  const auto reverse_prev =
      exact_phases(generate_point_set(ifs, Kind::frequency, Ordering::reverse, level - 1).points,
                   generate_point_set(ifs, Kind::spatial, Ordering::reverse, level - 1).points);

  std::vector<std::vector<Rational>> d_obverse(k), d_reverse(k);
  for (std::size_t b = 0; b < k; ++b) {
    d_obverse[b] = direct_diagonal_phases(system, level, b, Ordering::obverse);
    d_reverse[b] = direct_diagonal_phases(system, level, b, Ordering::reverse);
  }

  const auto& m1 = system.m1_phases();
  const std::size_t block = size / k;
  for (std::size_t j = 0; j < size; ++j) {
    const std::size_t jr = digit_reverse(j, k, level);
    const std::size_t l = j / block;
    const std::size_t qj = j % block;
    for (std::size_t col = 0; col < size; ++col) {
      const std::size_t cr = digit_reverse(col, k, level);
      const std::size_t m = col / block;
      const std::size_t qk = col % block;
      record(report.permutation_deviation, report.phases_exact, obverse[j][col], reverse[jr][cr]);
      record(report.obverse_block_deviation, report.phases_exact, obverse[j][col],
             mod1(m1[l][m] + d_obverse[m][qj] + obverse_prev[qj][qk]));
      record(report.reverse_block_deviation, report.phases_exact, reverse[j][col],
             mod1(m1[l][m] + reverse_prev[qj][qk] + d_reverse[l][qk]));
    }
  }
  return report;
}

}  // namespace ffft
