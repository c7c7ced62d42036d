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

#ifndef FFFT_IFS_CORE_HPP
#define FFFT_IFS_CORE_HPP

// Iterated function systems, their exact orbit points under the obverse and
// reverse composition orders, and base-K digit utilities.
//
// For j = j_0 + j_1 K + ... + j_{N-1} K^{N-1}:
//   obverse  Psi_{j,N} = psi_{j_0} o psi_{j_1} o ... o psi_{j_{N-1}}
//   reverse  Psi~_{j,N} = psi_{j_{N-1}} o ... o psi_{j_0}
// and likewise R_{j,N}, R~_{j,N} for the frequency maps rho_j.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffft/exact.hpp"
#include "ffft/phasor.hpp"

namespace ffft {

inline constexpr std::size_t kDefaultMaxPoints = std::size_t{1} << 20;

enum class Kind { spatial, frequency };
enum class Ordering { obverse, reverse };

std::string_view to_string(Kind kind);
std::string_view to_string(Ordering ordering);
Kind parse_kind(std::string_view text);
Ordering parse_ordering(std::string_view text);

// psi_j(x) = A (x + b_j), with A^-1 an integer matrix and b_0 = 0.
class SpatialIfs {
 public:
  SpatialIfs(IntMatrix a_inverse, std::vector<IntVector> translations);

  std::size_t dim() const { return a_inverse_.rows(); }
  std::size_t branch_count() const { return translations_.size(); }
  const IntMatrix& a_inverse() const { return a_inverse_; }
  const RationalMatrix& a() const { return a_; }
  const std::vector<IntVector>& translations() const { return translations_; }
  const Integer& det_a_inverse() const { return det_a_inverse_; }

  // Operator 2-norm of A. The maps are contractions iff this is < 1; a
  // violation only produces a warning since no algorithm here relies on it.
  double a_norm() const { return a_norm_; }
  bool is_contraction() const { return a_norm_ < 1.0; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  RationalVector apply(std::size_t j, const RationalVector& x) const;

 private:
  IntMatrix a_inverse_;
  std::vector<IntVector> translations_;
  RationalMatrix a_;
  Integer det_a_inverse_;
  double a_norm_ = 0.0;
  std::vector<std::string> warnings_;
};

// rho_j(x) = B x + c_j, with c_0 = 0.
class FrequencyIfs {
 public:
  FrequencyIfs(IntMatrix b_matrix, std::vector<IntVector> translations);

  // The dual system with B = (A^T)^-1, i.e. the transpose of A^-1.
  static FrequencyIfs dual_of(const SpatialIfs& spatial, std::vector<IntVector> translations);

  std::size_t dim() const { return b_matrix_.rows(); }
  std::size_t branch_count() const { return translations_.size(); }
  const IntMatrix& b_matrix() const { return b_matrix_; }
  const std::vector<IntVector>& translations() const { return translations_; }

  IntVector apply(std::size_t j, const IntVector& x) const;
  RationalVector apply(std::size_t j, const RationalVector& x) const;

 private:
  IntMatrix b_matrix_;
  std::vector<IntVector> translations_;
};

// A spatial system together with its dual frequency system.
class IfsPair {
 public:
  IfsPair(SpatialIfs spatial, FrequencyIfs frequency);

  const SpatialIfs& spatial() const { return spatial_; }
  const FrequencyIfs& frequency() const { return frequency_; }
  std::size_t dim() const { return spatial_.dim(); }
  std::size_t branch_count() const { return spatial_.branch_count(); }

 private:
  SpatialIfs spatial_;
  FrequencyIfs frequency_;
};

struct OrderedPointSet {
  std::size_t level = 0;
  Ordering ordering = Ordering::obverse;
  Kind kind = Kind::spatial;
  std::vector<RationalVector> points;
  // Set when two indices map to the same point. The transform stays defined
  // by the index set either way.
  bool has_duplicates = false;
};

// K^N, throwing ResourceError above max_points.
std::size_t point_count(std::size_t base, std::size_t length, std::size_t max_points = kDefaultMaxPoints);

// [j_0, ..., j_{N-1}] with j = sum j_n K^n.
std::vector<std::size_t> base_digits(std::size_t j, std::size_t base, std::size_t length);

// j~ = j_{N-1} + j_{N-2} K + ... + j_0 K^{N-1}.
std::size_t digit_reverse(std::size_t j, std::size_t base, std::size_t length);

// Applies the N-fold composition with index j to an arbitrary point x.
RationalVector apply_composition(const IfsPair& ifs, Kind kind, Ordering ordering, std::size_t j,
                                 std::size_t level, const RationalVector& x);

// Psi_{j,N}(0), Psi~_{j,N}(0), R_{j,N}(0) or R~_{j,N}(0) by literal composition.
RationalVector orbit_point(const IfsPair& ifs, Kind kind, Ordering ordering, std::size_t j, std::size_t level);

OrderedPointSet generate_point_set(const IfsPair& ifs, Kind kind, Ordering ordering, std::size_t level,
                                   std::size_t max_points = kDefaultMaxPoints);

// output[m] = v[digit_reverse(m)].
ComplexVector digit_reversal_permute(std::span<const Complex> v, std::size_t base, std::size_t length);

}  // namespace ffft

#endif  // FFFT_IFS_CORE_HPP
