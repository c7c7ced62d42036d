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

#include "ffft/dita_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "ffft/errors.hpp"

namespace ffft {
namespace {

std::size_t checked_block(const ComplexMatrix& outer, std::span<const ComplexVector> diagonals,
                          std::span<const Complex> in, std::span<Complex> out) {
  const auto k = static_cast<std::size_t>(outer.rows());
  if (k == 0 || outer.cols() != outer.rows()) throw ShapeError("outer matrix must be square and non-empty");
  if (diagonals.size() != k) throw ShapeError("expected one diagonal per branch");
  if (in.size() % k != 0 || out.size() != in.size())
    throw ShapeError("block apply: input length " + std::to_string(in.size()) + " is not compatible with " +
                     std::to_string(k) + " branches");
  const std::size_t m = in.size() / k;
  for (std::size_t b = 1; b < k; ++b)
    if (diagonals[b].size() != m) throw ShapeError("diagonal length does not match the block size");
  return m;
}

}  // namespace

void column_form_apply(const ComplexMatrix& outer, std::span<const ComplexVector> diagonals, const BlockApply& inner,
                       std::span<const Complex> in, std::span<Complex> out, OpCounter& counter) {
  const std::size_t m = checked_block(outer, diagonals, in, out);
  const auto k = static_cast<std::size_t>(outer.rows());

  ComplexVector scaled(in.size());
  for (std::size_t col = 0; col < k; ++col) {
    std::span<Complex> u(scaled.data() + col * m, m);
    inner(in.subspan(col * m, m), u, counter);
    if (col == 0) continue;
    const ComplexVector& e = diagonals[col];
    for (std::size_t p = 0; p < m; ++p) u[p] *= e[p];
    counter.multiplications += m;
  }

  for (std::size_t row = 0; row < k; ++row) {
    Complex* dst = out.data() + row * m;
    const Complex a0 = outer(row, 0);
    for (std::size_t p = 0; p < m; ++p) dst[p] = a0 * scaled[p];
    counter.multiplications += m;
    for (std::size_t col = 1; col < k; ++col) {
      const Complex a = outer(row, col);
      const Complex* src = scaled.data() + col * m;
      for (std::size_t p = 0; p < m; ++p) dst[p] += a * src[p];
      counter.multiplications += m;
      counter.additions += m;
    }
  }
}

void row_form_apply(const ComplexMatrix& outer, std::span<const ComplexVector> diagonals, const BlockApply& inner,
                    std::span<const Complex> in, std::span<Complex> out, OpCounter& counter) {
  const std::size_t m = checked_block(outer, diagonals, in, out);
  const auto k = static_cast<std::size_t>(outer.rows());

  ComplexVector mixed(m);
  for (std::size_t row = 0; row < k; ++row) {
    const Complex a0 = outer(row, 0);
    for (std::size_t p = 0; p < m; ++p) mixed[p] = a0 * in[p];
    counter.multiplications += m;
    for (std::size_t col = 1; col < k; ++col) {
      const Complex a = outer(row, col);
      const Complex* src = in.data() + col * m;
      for (std::size_t p = 0; p < m; ++p) mixed[p] += a * src[p];
      counter.multiplications += m;
      counter.additions += m;
    }
    if (row != 0) {
      const ComplexVector& e = diagonals[row];
      for (std::size_t p = 0; p < m; ++p) mixed[p] *= e[p];
      counter.multiplications += m;
    }
    inner(mixed, out.subspan(row * m, m), counter);
  }
}

void dense_apply(const ComplexMatrix& matrix, std::span<const Complex> in, std::span<Complex> out,
                 OpCounter& counter) {
  const auto rows = static_cast<std::size_t>(matrix.rows());
  const auto cols = static_cast<std::size_t>(matrix.cols());
  if (in.size() != cols || out.size() != rows) throw ShapeError("dense apply: length mismatch");
  for (std::size_t r = 0; r < rows; ++r) {
    Complex acc = matrix(r, 0) * in[0];
    for (std::size_t c = 1; c < cols; ++c) acc += matrix(r, c) * in[c];
    out[r] = acc;
  }
  counter.multiplications += rows * cols;
  counter.additions += rows * (cols - 1);
}

DitaSpec::DitaSpec(ComplexMatrix outer, std::vector<ComplexVector> diagonals, BlockApply inner_apply,
                   std::size_t block_size)
    : outer_(std::move(outer)),
      diagonals_(std::move(diagonals)),
      inner_apply_(std::move(inner_apply)),
      block_size_(block_size) {
  const auto k = static_cast<std::size_t>(outer_.rows());
  if (k == 0 || outer_.cols() != outer_.rows()) throw ValidationError("outer matrix must be square and non-empty");
  if (block_size_ == 0) throw ValidationError("block size must be positive");
  if (diagonals_.size() != k) throw ValidationError("expected " + std::to_string(k) + " diagonals");
  if (!inner_apply_) throw ValidationError("inner apply is empty");

  inverse_diagonals_.resize(k);
  for (std::size_t b = 0; b < k; ++b) {
    const ComplexVector& e = diagonals_[b];
    if (e.size() != block_size_)
      throw ValidationError("diagonal " + std::to_string(b) + " has length " + std::to_string(e.size()) +
                            ", expected " + std::to_string(block_size_));
    inverse_diagonals_[b].resize(block_size_);
    for (std::size_t p = 0; p < block_size_; ++p) {
      if (b == 0 && std::abs(e[p] - Complex(1.0, 0.0)) > 1e-12)
        throw ValidationError("diagonal 0 must be the identity");
      if (e[p] == Complex(0.0, 0.0))
        throw ValidationError("diagonal " + std::to_string(b) + " has a zero entry at " + std::to_string(p));
      inverse_diagonals_[b][p] = Complex(1.0, 0.0) / e[p];
    }
  }

  Eigen::FullPivLU<ComplexMatrix> lu(outer_);
  outer_determinant_ = lu.determinant();
  double max_row = 0.0;
  for (Eigen::Index r = 0; r < outer_.rows(); ++r) max_row = std::max(max_row, outer_.row(r).norm());
  const double threshold = 1e-9 * std::pow(max_row, static_cast<double>(k));
  if (!(std::abs(outer_determinant_) > threshold)) {
    std::ostringstream os;
    os << "outer matrix is singular: |det| = " << std::abs(outer_determinant_) << " <= " << threshold;
    throw NumericalError(os.str());
  }
  outer_inverse_ = lu.inverse();
}

ComplexVector dita_apply(const DitaSpec& spec, std::span<const Complex> v, OpCounter& counter) {
  if (v.size() != spec.size())
    throw ShapeError("dita_apply: input length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(spec.size()));
  ComplexVector out(v.size());
  column_form_apply(spec.outer(), spec.diagonals(), spec.inner_apply(), v, out, counter);
  return out;
}

ComplexVector dita_inverse_apply(const DitaSpec& spec, const BlockApply& inner_inverse_apply,
                                 std::span<const Complex> w, OpCounter& counter) {
  if (w.size() != spec.size())
    throw ShapeError("dita_inverse_apply: input length " + std::to_string(w.size()) + ", expected " +
                     std::to_string(spec.size()));
  ComplexVector out(w.size());
  row_form_apply(spec.outer_inverse(), spec.inverse_diagonals(), inner_inverse_apply, w, out, counter);
  return out;
}

std::uint64_t dita_op_bound(std::uint64_t branch_count, std::uint64_t block_size, std::uint64_t inner_ops) {
  const std::uint64_t k = branch_count;
  const std::uint64_t m = block_size;
  return k * inner_ops + 3 * m * k * k - 2 * m * k;
}

ComplexMatrix dita_dense(const DitaSpec& spec, const ComplexMatrix& inner) {
  const auto k = static_cast<Eigen::Index>(spec.branch_count());
  const auto m = static_cast<Eigen::Index>(spec.block_size());
  if (inner.rows() != m || inner.cols() != m) throw ShapeError("dense inner block has the wrong size");
  ComplexMatrix h(k * m, k * m);
  for (Eigen::Index col = 0; col < k; ++col) {
    ComplexMatrix eb = inner;
    if (col != 0)
      for (Eigen::Index p = 0; p < m; ++p) eb.row(p) *= spec.diagonals()[col][p];
    for (Eigen::Index row = 0; row < k; ++row) h.block(row * m, col * m, m, m) = spec.outer()(row, col) * eb;
  }
  return h;
}

ComplexMatrix dita_dense_inverse(const DitaSpec& spec, const ComplexMatrix& inner_inverse) {
  const auto k = static_cast<Eigen::Index>(spec.branch_count());
  const auto m = static_cast<Eigen::Index>(spec.block_size());
  if (inner_inverse.rows() != m || inner_inverse.cols() != m)
    throw ShapeError("dense inner inverse has the wrong size");
  ComplexMatrix g(k * m, k * m);
  for (Eigen::Index row = 0; row < k; ++row) {
    ComplexMatrix be = inner_inverse;
    if (row != 0)
      for (Eigen::Index p = 0; p < m; ++p) be.col(p) *= spec.inverse_diagonals()[row][p];
    for (Eigen::Index col = 0; col < k; ++col)
      g.block(row * m, col * m, m, m) = spec.outer_inverse()(row, col) * be;
  }
  return g;
}

}  // namespace ffft
