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

#ifndef FFFT_DITA_ENGINE_HPP
#define FFFT_DITA_ENGINE_HPP

// Block matrices of the form
//
//       [ a_00 E_0 B   a_01 E_1 B   ...   a_0(K-1) E_{K-1} B ]
//   H = [    ...                                             ]
//       [ a_(K-1)0 E_0 B  ...       a_(K-1)(K-1) E_{K-1} B   ]
//
// with E_0 = I, applied to vectors without materializing H. The inner
// block B is an arbitrary callable, so levels can be stacked.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ffft/phasor.hpp"

namespace ffft {

// Complex multiplications and additions, each counted as one operation.
struct OpCounter {
  std::uint64_t multiplications = 0;
  std::uint64_t additions = 0;

  std::uint64_t total() const { return multiplications + additions; }
  void reset() { *this = OpCounter{}; }
};

using BlockApply = std::function<void(std::span<const Complex> in, std::span<Complex> out, OpCounter& counter)>;

// Low-level kernels shared by the Dita apply/inverse and the fractal
// transform recursion. `diagonals` has K entries; entry 0 is ignored and
// treated as the identity. `block` is M = in.size() / K.
//
// Column form:  out_j = sum_k a_jk E_k inner(in_k)
// Row form:     out_j = inner(E_j sum_k a_jk in_k)
void column_form_apply(const ComplexMatrix& outer, std::span<const ComplexVector> diagonals, const BlockApply& inner,
                       std::span<const Complex> in, std::span<Complex> out, OpCounter& counter);
void row_form_apply(const ComplexMatrix& outer, std::span<const ComplexVector> diagonals, const BlockApply& inner,
                    std::span<const Complex> in, std::span<Complex> out, OpCounter& counter);

// Plain dense product, counted as K^2 multiplications and K(K-1) additions.
void dense_apply(const ComplexMatrix& matrix, std::span<const Complex> in, std::span<Complex> out,
                 OpCounter& counter);

class DitaSpec {
 public:
  // Throws ValidationError when a diagonal has the wrong length, E_0 is not
  // all ones or a diagonal entry is zero; NumericalError when `outer` is
  // singular (|det| <= 1e-9 * (max row norm)^K).
  DitaSpec(ComplexMatrix outer, std::vector<ComplexVector> diagonals, BlockApply inner_apply, std::size_t block_size);

  std::size_t branch_count() const { return static_cast<std::size_t>(outer_.rows()); }
  std::size_t block_size() const { return block_size_; }
  std::size_t size() const { return branch_count() * block_size_; }

  const ComplexMatrix& outer() const { return outer_; }
  const ComplexMatrix& outer_inverse() const { return outer_inverse_; }
  Complex outer_determinant() const { return outer_determinant_; }
  const std::vector<ComplexVector>& diagonals() const { return diagonals_; }
  const std::vector<ComplexVector>& inverse_diagonals() const { return inverse_diagonals_; }
  const BlockApply& inner_apply() const { return inner_apply_; }

 private:
  ComplexMatrix outer_;
  ComplexMatrix outer_inverse_;
  Complex outer_determinant_;
  std::vector<ComplexVector> diagonals_;
  std::vector<ComplexVector> inverse_diagonals_;
  BlockApply inner_apply_;
  std::size_t block_size_;
};

// H v. Adds to `counter` without resetting it, so nested applies accumulate.
ComplexVector dita_apply(const DitaSpec& spec, std::span<const Complex> v, OpCounter& counter);

// H^-1 w using the block inverse: block (k, l) of H^-1 is c_kl B^-1 E_k^-1
// where C = outer^-1.
ComplexVector dita_inverse_apply(const DitaSpec& spec, const BlockApply& inner_inverse_apply,
                                 std::span<const Complex> w, OpCounter& counter);

// Upper bound K O_M + 3 M K^2 - 2 M K on the cost of H v.
std::uint64_t dita_op_bound(std::uint64_t branch_count, std::uint64_t block_size, std::uint64_t inner_ops);

// Materialized H from a dense inner block.
ComplexMatrix dita_dense(const DitaSpec& spec, const ComplexMatrix& inner);
// Materialized block inverse from a dense B^-1.
ComplexMatrix dita_dense_inverse(const DitaSpec& spec, const ComplexMatrix& inner_inverse);

}  // namespace ffft

#endif  // FFFT_DITA_ENGINE_HPP
