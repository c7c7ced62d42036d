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

#ifndef FFFT_FRACTAL_TRANSFORM_HPP
#define FFFT_FRACTAL_TRANSFORM_HPP

// The fast fractal Fourier transform.
//
// With rows indexed by frequencies and columns by data points,
//   [M_N]_{jk}  = e^{-2 pi i R_{j,N}(0) . Psi_{k,N}(0)}     (obverse)
//   [M~_N]_{jk} = e^{-2 pi i R~_{j,N}(0) . Psi~_{k,N}(0)}   (reverse)
// split into K x K blocks of size K^{N-1}:
//   M_N  block (l, m) = m_lm D_{N,m} M_{N-1}
//   M~_N block (l, m) = m_lm M~_{N-1} D~_{N,l}
// where m_lm are the entries of the seed matrix M_1 and the diagonals
// factor over base-K digits p = p_0 + p_1 K + ... :
//   [D_{N,m}]_pp  = prod_i e^{-2 pi i c_{p_i} . A^{N-i} b_m}
//   [D~_{N,l}]_pp = prod_i e^{-2 pi i c_l . A^{N-i} b_{p_i}}

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ffft/dita_engine.hpp"
#include "ffft/exact.hpp"
#include "ffft/ifs_core.hpp"
#include "ffft/phasor.hpp"

namespace ffft {

inline constexpr std::size_t kOracleMaxPoints = 4096;

enum class M1Class { invertible, hadamard };

std::string_view to_string(M1Class c);
M1Class parse_m1_class(std::string_view text);

class FractalSystem {
 public:
  const IfsPair& ifs() const { return ifs_; }
  const SpatialIfs& spatial() const { return ifs_.spatial(); }
  const FrequencyIfs& frequency() const { return ifs_.frequency(); }
  std::size_t dim() const { return ifs_.dim(); }
  std::size_t branch_count() const { return ifs_.branch_count(); }

  // Exact phases c_j . A b_k mod 1 and the seed matrix they define.
  const std::vector<std::vector<Rational>>& m1_phases() const { return m1_phases_; }
  const ComplexMatrix& m1() const { return m1_; }
  M1Class m1_class() const { return m1_class_; }
  Complex m1_determinant() const { return m1_determinant_; }

 private:
  friend FractalSystem build_system(const SpatialIfs&, const FrequencyIfs&, M1Class);
  explicit FractalSystem(IfsPair ifs) : ifs_(std::move(ifs)) {}

  IfsPair ifs_;
  std::vector<std::vector<Rational>> m1_phases_;
  ComplexMatrix m1_;
  M1Class m1_class_ = M1Class::invertible;
  Complex m1_determinant_;
};

// Validates the pair and classifies M_1. The reported class is the strongest
// one that holds; a ValidationError is thrown if it is weaker than `required`.
FractalSystem build_system(const SpatialIfs& spatial, const FrequencyIfs& frequency, M1Class required);

// c . A^n b mod 1, exactly.
Rational phase(const FractalSystem& system, const IntVector& c, unsigned n, const IntVector& b);

class TransformPlan {
 public:
  const FractalSystem& system() const { return system_; }
  std::size_t level() const { return level_; }
  Ordering ordering() const { return ordering_; }
  std::size_t size() const { return size_; }
  std::size_t branch_count() const { return system_.branch_count(); }

  // Phases of E_{n,branch} (obverse) or E~_{n,branch} (reverse), n in [2, N]:
  //   obverse  [E_{n,m}]_uu  = c_u . A^n b_m
  //   reverse  [E~_{n,l}]_uu = c_l . A^n b_u
  const std::vector<Rational>& diag_phases(std::size_t n, std::size_t branch) const;
  // The same factors as unit phasors, evaluated once at plan time.
  const ComplexVector& diag_phasors(std::size_t n, std::size_t branch) const;

  const ComplexMatrix& m1_inverse() const { return m1_inverse_; }
  double m1_inverse_residual() const { return m1_inverse_residual_; }

 private:
  friend TransformPlan build_plan(const FractalSystem&, std::size_t, Ordering, std::size_t);
  explicit TransformPlan(const FractalSystem& system) : system_(system) {}

  FractalSystem system_;
  std::size_t level_ = 0;
  Ordering ordering_ = Ordering::obverse;
  std::size_t size_ = 0;
  // [n - 2][branch][u]
  std::vector<std::vector<std::vector<Rational>>> diag_phases_;
  std::vector<std::vector<ComplexVector>> diag_phasors_;
  ComplexMatrix m1_inverse_;
  double m1_inverse_residual_ = 0.0;
};

TransformPlan build_plan(const FractalSystem& system, std::size_t level, Ordering ordering,
                         std::size_t max_points = kDefaultMaxPoints);

// Residual bound on ||M_1 M_1^-1 - I||_inf that inverse_apply insists on.
inline constexpr double kM1InverseResidual = 1e-12;

// M_N v (obverse) or M~_N v (reverse). Resets `counter` first.
ComplexVector forward_apply(const TransformPlan& plan, std::span<const Complex> v, OpCounter& counter);
// M_N^-1 w or M~_N^-1 w. Resets `counter` first.
ComplexVector inverse_apply(const TransformPlan& plan, std::span<const Complex> w, OpCounter& counter);
// M_N^* v or M~_N^* v. Resets `counter` first.
ComplexVector adjoint_apply(const TransformPlan& plan, std::span<const Complex> v, OpCounter& counter);

// Diagonal phases of D_{n,branch} or D~_{n,branch} (length K^{n-1}) built
// from the plan tables with the Kronecker recurrence D_n = D_{n-1} (x) E_n.
std::vector<Rational> diagonal_phases(const TransformPlan& plan, std::size_t n, std::size_t branch);

// The same diagonals straight from their definition through orbit points:
//   obverse  R_{p,n-1}(0) . A^n b_m
//   reverse  c_l . A Psi~_{p,n-1}(0)
std::vector<Rational> direct_diagonal_phases(const FractalSystem& system, std::size_t n, std::size_t branch,
                                             Ordering ordering);

// K^{N-1} P_1 + 3 (N-1) K^{N+1} - 2 (N-1) K^N.
std::uint64_t plan_op_count_bound(std::uint64_t branch_count, std::uint64_t level, std::uint64_t p1);
// Cost of the dense K x K base apply: 2K^2 - K.
std::uint64_t base_apply_cost(std::uint64_t branch_count);

// Dense oracle built entry by entry from exact orbit-point phases.
ComplexMatrix dense_matrix(const FractalSystem& system, std::size_t level, Ordering ordering,
                           std::size_t max_points = kOracleMaxPoints);

struct BlockIdentityReport {
  std::size_t level = 0;
  // max |[P M~_N P - M_N]_{mn}|
  double permutation_deviation = 0.0;
  // max deviation of M_N from m_lm D_{N,m} M_{N-1}
  double obverse_block_deviation = 0.0;
  // max deviation of M~_N from m_lm M~_{N-1} D~_{N,l}
  double reverse_block_deviation = 0.0;
  // True when all three identities hold as equalities of rational phases.
  bool phases_exact = true;

  double max_deviation() const;
};

BlockIdentityReport verify_block_identities(const FractalSystem& system, std::size_t level,
                                            std::size_t max_points = kOracleMaxPoints);

}  // namespace ffft

#endif  // FFFT_FRACTAL_TRANSFORM_HPP
