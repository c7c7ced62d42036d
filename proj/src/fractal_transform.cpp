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

#include "ffft/fractal_transform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "ffft/errors.hpp"

namespace ffft {
namespace {

constexpr double kHadamardTolerance = 1e-9;

double infinity_norm(const ComplexMatrix& m) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) best = std::max(best, m.row(r).cwiseAbs().sum());
  return best;
}

// How a level-n block is applied, plus the expanded diagonals for this call.
struct Recursion {
  const ComplexMatrix* outer = nullptr;
  const ComplexMatrix* base = nullptr;
  bool column_form = true;
  // [n][branch]; only n >= 2 and branch >= 1 are filled.
  std::vector<std::vector<ComplexVector>> diagonals;
};

void run_level(const Recursion& r, std::size_t n, std::span<const Complex> in, std::span<Complex> out,
               OpCounter& counter) {
  if (n == 1) {
    dense_apply(*r.base, in, out, counter);
    return;
  }
  const BlockApply inner = [&r, n](std::span<const Complex> i, std::span<Complex> o, OpCounter& c) {
    run_level(r, n - 1, i, o, c);
  };
  if (r.column_form)
    column_form_apply(*r.outer, r.diagonals[n], inner, in, out, counter);
  else
    row_form_apply(*r.outer, r.diagonals[n], inner, in, out, counter);
}

// Expands the K-entry factor tables into full diagonals, one Kronecker step
// per level, so every diagonal costs one multiplication per entry.
std::vector<std::vector<ComplexVector>> expand_diagonals(const TransformPlan& plan, bool conjugate) {
  const std::size_t k = plan.branch_count();
  const std::size_t levels = plan.level();
  std::vector<std::vector<ComplexVector>> out(levels + 1, std::vector<ComplexVector>(k));
  for (std::size_t branch = 1; branch < k; ++branch) {
    ComplexVector current(1, Complex(1.0, 0.0));
    for (std::size_t n = 2; n <= levels; ++n) {
      const ComplexVector& e = plan.diag_phasors(n, branch);
      ComplexVector next(current.size() * k);
      for (std::size_t hat = 0; hat < current.size(); ++hat)
        for (std::size_t low = 0; low < k; ++low) next[hat * k + low] = current[hat] * e[low];
      current = std::move(next);
      ComplexVector& stored = out[n][branch];
      stored = current;
      if (conjugate)
        for (auto& z : stored) z = std::conj(z);
    }
  }
  return out;
}

void check_length(const TransformPlan& plan, std::size_t length, const char* what) {
  if (length != plan.size())
    throw ShapeError(std::string(what) + ": input length " + std::to_string(length) + ", expected " +
                     std::to_string(plan.size()));
}

ComplexVector run(const TransformPlan& plan, const Recursion& r, std::span<const Complex> v, OpCounter& counter) {
  counter.reset();
  ComplexVector out(v.size());
  run_level(r, plan.level(), v, out, counter);
  return out;
}

}  // namespace

std::string_view to_string(M1Class c) { return c == M1Class::hadamard ? "hadamard" : "invertible"; }

M1Class parse_m1_class(std::string_view text) {
  if (text == "hadamard") return M1Class::hadamard;
  if (text == "invertible") return M1Class::invertible;
  throw ValidationError("unknown M1 class '" + std::string(text) + "'");
}

FractalSystem build_system(const SpatialIfs& spatial, const FrequencyIfs& frequency, M1Class required) {
  FractalSystem system{IfsPair(spatial, frequency)};
  const std::size_t k = system.branch_count();
  const auto& bs = spatial.translations();
  const auto& cs = frequency.translations();

  system.m1_phases_.assign(k, std::vector<Rational>(k));
  system.m1_ = ComplexMatrix(k, k);
  for (std::size_t col = 0; col < k; ++col) {
    const RationalVector ab = multiply(spatial.a(), bs[col]);
    for (std::size_t row = 0; row < k; ++row) {
      system.m1_phases_[row][col] = mod1(dot(cs[row], ab));
      system.m1_(row, col) = unit_phasor(system.m1_phases_[row][col]);
    }
  }

  system.m1_determinant_ = system.m1_.fullPivLu().determinant();
  // Rows have unit-modulus entries, so every row norm is sqrt(K).
  const double threshold = 1e-9 * std::pow(std::sqrt(static_cast<double>(k)), static_cast<double>(k));
  if (!(std::abs(system.m1_determinant_) > threshold)) {
    std::ostringstream os;
    os << "M₁ singular: |det M₁| = " << std::abs(system.m1_determinant_) << " <= " << threshold;
    throw NumericalError(os.str());
  }

  const ComplexMatrix gram = system.m1_.adjoint() * system.m1_;
  const ComplexMatrix scaled_identity = static_cast<double>(k) * ComplexMatrix::Identity(k, k);
  const double hadamard_error = (gram - scaled_identity).cwiseAbs().maxCoeff();
  system.m1_class_ = hadamard_error < kHadamardTolerance ? M1Class::hadamard : M1Class::invertible;
  if (required == M1Class::hadamard && system.m1_class_ != M1Class::hadamard) {
    std::ostringstream os;
    os << "M₁ is invertible but not Hadamard: max |M₁* M₁ - K I| = " << hadamard_error;
    throw ValidationError(os.str());
  }
  return system;
}

Rational phase(const FractalSystem& system, const IntVector& c, unsigned n, const IntVector& b) {
  if (n < 1) throw RangeError("phase power must be at least 1");
  if (c.size() != system.dim() || b.size() != system.dim()) throw ShapeError("phase: vector dimension mismatch");
  return mod1(dot(c, multiply(power(system.spatial().a(), n), b)));
}

const std::vector<Rational>& TransformPlan::diag_phases(std::size_t n, std::size_t branch) const {
  if (n < 2 || n > level_ || branch >= branch_count()) throw RangeError("diagonal factor index out of range");
  return diag_phases_[n - 2][branch];
}

const ComplexVector& TransformPlan::diag_phasors(std::size_t n, std::size_t branch) const {
  if (n < 2 || n > level_ || branch >= branch_count()) throw RangeError("diagonal factor index out of range");
  return diag_phasors_[n - 2][branch];
}

TransformPlan build_plan(const FractalSystem& system, std::size_t level, Ordering ordering, std::size_t max_points) {
  if (level < 1) throw RangeError("level must be at least 1");
  TransformPlan plan(system);
  const std::size_t k = system.branch_count();
  plan.level_ = level;
  plan.ordering_ = ordering;
  plan.size_ = point_count(k, level, max_points);

  const auto& bs = system.spatial().translations();
  const auto& cs = system.frequency().translations();
  RationalMatrix a_power = multiply(system.spatial().a(), system.spatial().a());
  for (std::size_t n = 2; n <= level; ++n) {
    // table[u][m] = c_u . A^n b_m mod 1
    std::vector<std::vector<Rational>> table(k, std::vector<Rational>(k));
    for (std::size_t m = 0; m < k; ++m) {
      const RationalVector anb = multiply(a_power, bs[m]);
      for (std::size_t u = 0; u < k; ++u) table[u][m] = mod1(dot(cs[u], anb));
    }
    std::vector<std::vector<Rational>> phases(k, std::vector<Rational>(k));
    std::vector<ComplexVector> phasors(k, ComplexVector(k));
    for (std::size_t branch = 0; branch < k; ++branch) {
      for (std::size_t u = 0; u < k; ++u) {
        phases[branch][u] = ordering == Ordering::obverse ? table[u][branch] : table[branch][u];
        phasors[branch][u] = unit_phasor(phases[branch][u]);
      }
    }
    plan.diag_phases_.push_back(std::move(phases));
    plan.diag_phasors_.push_back(std::move(phasors));
    a_power = multiply(a_power, system.spatial().a());
  }

  const ComplexMatrix& m1 = system.m1();
  const ComplexMatrix identity = ComplexMatrix::Identity(m1.rows(), m1.cols());
  ComplexMatrix inv = m1.fullPivLu().inverse();
  inv += inv * (identity - m1 * inv);  // one step of iterative refinement
  plan.m1_inverse_ = std::move(inv);
  plan.m1_inverse_residual_ = infinity_norm(m1 * plan.m1_inverse_ - identity);
  return plan;
}

ComplexVector forward_apply(const TransformPlan& plan, std::span<const Complex> v, OpCounter& counter) {
  check_length(plan, v.size(), "forward_apply");
  Recursion r;
  r.outer = &plan.system().m1();
  r.base = &plan.system().m1();
  // Obverse: Dita column form with diagonals D_{n,m} on the left of M_{n-1}.
  // Reverse: t_l = sum_m m_lm v_m, out_l = M~_{n-1} D~_{n,l} t_l.
  r.column_form = plan.ordering() == Ordering::obverse;
  r.diagonals = expand_diagonals(plan, false);
  return run(plan, r, v, counter);
}

ComplexVector inverse_apply(const TransformPlan& plan, std::span<const Complex> w, OpCounter& counter) {
  check_length(plan, w.size(), "inverse_apply");
  if (!(plan.m1_inverse_residual() < kM1InverseResidual)) {
    std::ostringstream os;
    os << "M₁ inverse residual " << plan.m1_inverse_residual() << " exceeds " << kM1InverseResidual;
    throw NumericalError(os.str());
  }
  Recursion r;
  r.outer = &plan.m1_inverse();
  r.base = &plan.m1_inverse();
  // Obverse: out_m = M_{n-1}^-1 D_{n,m}^-1 sum_l c_ml w_l.
  // Reverse: out_m = sum_l c_ml D~_{n,l}^-1 M~_{n-1}^-1 w_l.
  r.column_form = plan.ordering() == Ordering::reverse;
  r.diagonals = expand_diagonals(plan, true);
  return run(plan, r, w, counter);
}

ComplexVector adjoint_apply(const TransformPlan& plan, std::span<const Complex> v, OpCounter& counter) {
  check_length(plan, v.size(), "adjoint_apply");
  const ComplexMatrix m1_adjoint = plan.system().m1().adjoint();
  Recursion r;
  r.outer = &m1_adjoint;
  r.base = &m1_adjoint;
  // Obverse: out_l = M_{n-1}^* conj(D_{n,l}) sum_m conj(m_ml) v_m.
  // Reverse: out_l = sum_m conj(m_ml) conj(D~_{n,m}) M~_{n-1}^* v_m.
  r.column_form = plan.ordering() == Ordering::reverse;
  r.diagonals = expand_diagonals(plan, true);
  return run(plan, r, v, counter);
}

std::vector<Rational> diagonal_phases(const TransformPlan& plan, std::size_t n, std::size_t branch) {
  if (n < 2 || n > plan.level()) throw RangeError("diagonal level out of range");
  const std::size_t k = plan.branch_count();
  std::vector<Rational> current(1, Rational(0));
  for (std::size_t level = 2; level <= n; ++level) {
    const auto& e = plan.diag_phases(level, branch);
    std::vector<Rational> next(current.size() * k);
    for (std::size_t hat = 0; hat < current.size(); ++hat)
      for (std::size_t low = 0; low < k; ++low) next[hat * k + low] = mod1(current[hat] + e[low]);
    current = std::move(next);
  }
  return current;
}

std::vector<Rational> direct_diagonal_phases(const FractalSystem& system, std::size_t n, std::size_t branch,
                                             Ordering ordering) {
  if (n < 2) throw RangeError("diagonal level must be at least 2");
  const std::size_t k = system.branch_count();
  if (branch >= k) throw RangeError("diagonal branch out of range");
  const std::size_t count = point_count(k, n - 1);
  std::vector<Rational> out(count);
  if (ordering == Ordering::obverse) {
    const RationalVector anb = multiply(power(system.spatial().a(), static_cast<unsigned>(n)),
                                        system.spatial().translations()[branch]);
    for (std::size_t p = 0; p < count; ++p) {
      const RationalVector r = orbit_point(system.ifs(), Kind::frequency, Ordering::obverse, p, n - 1);
      out[p] = mod1(dot(r, anb));
    }
  } else {
    const IntVector& c = system.frequency().translations()[branch];
    for (std::size_t p = 0; p < count; ++p) {
      const RationalVector psi = orbit_point(system.ifs(), Kind::spatial, Ordering::reverse, p, n - 1);
      out[p] = mod1(dot(c, multiply(system.spatial().a(), psi)));
    }
  }
  return out;
}

std::uint64_t plan_op_count_bound(std::uint64_t branch_count, std::uint64_t level, std::uint64_t p1) {
  if (branch_count == 0 || level == 0) throw RangeError("op-count bound needs positive K and N");
  std::uint64_t k_pow = 1;  // K^{N-1}
  for (std::uint64_t i = 1; i < level; ++i) k_pow *= branch_count;
  const std::uint64_t k = branch_count;
  const std::uint64_t levels = level - 1;
  return k_pow * p1 + 3 * levels * k_pow * k * k - 2 * levels * k_pow * k;
}

std::uint64_t base_apply_cost(std::uint64_t branch_count) { return 2 * branch_count * branch_count - branch_count; }

}  // namespace ffft
