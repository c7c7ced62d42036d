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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "ffft/fixtures.hpp"
#include "ffft/fractal_transform.hpp"
#include "ffft/spectrum_search.hpp"
#include "test_support.hpp"

namespace {

using namespace ffft;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* format, double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, x);
  return buffer;
}

std::size_t max_level(std::size_t k, std::size_t cap) {
  std::size_t n = 1;
  while (point_count(k, n + 1, std::size_t{1} << 40) <= cap) ++n;
  return n;
}

Outcome classical_fft() {
  const TransformPlan plan = build_plan(fixtures::dyadic(), 10, Ordering::obverse);
  const ComplexVector v = testing::random_vector(plan.size(), 1);
  OpCounter counter;
  const auto start = std::chrono::steady_clock::now();
  const ComplexVector fast = forward_apply(plan, v, counter);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ComplexVector permuted(v.size());
  for (std::size_t m = 0; m < v.size(); ++m) permuted[m] = v[testing::reverse_digits(m, 2, 10)];
  const double deviation = max_abs_diff(fast, testing::naive_dft(permuted));
  return {deviation < 1e-9 && seconds < 1.0,
          "N=10 max|fast - DFT(Pv)| = " + fmt("%.3g", deviation) + ", fast apply " + fmt("%.4f", seconds) + " s"};
}

Outcome dense_equivalence() {
  Outcome out;
  double worst_forward = 0.0, worst_inverse = 0.0;
  for (const auto& named : fixtures::all()) {
    const std::size_t k = named.system.branch_count();
    for (std::size_t n = 1; n <= max_level(k, 1024); ++n)
      for (Ordering ordering : {Ordering::obverse, Ordering::reverse}) {
        const TransformPlan plan = build_plan(named.system, n, ordering);
        const ComplexMatrix dense = dense_matrix(named.system, n, ordering);
        const Eigen::PartialPivLU<ComplexMatrix> lu(dense);
        for (int trial = 0; trial < 20; ++trial) {
          const ComplexVector v = testing::random_vector(plan.size(), 1000 * n + trial);
          OpCounter counter;
          const double fwd = testing::max_deviation(forward_apply(plan, v, counter), dense * testing::as_eigen(v));
          const double inv = testing::max_deviation(inverse_apply(plan, v, counter), lu.solve(testing::as_eigen(v)));
          worst_forward = std::max(worst_forward, fwd);
          worst_inverse = std::max(worst_inverse, inv);
          if (!(fwd < 1e-9 && inv < 1e-9)) out.pass = false;
        }
      }
  }
  out.detail = "4 fixtures, K^N <= 1024, 20 vectors: forward " + fmt("%.3g", worst_forward) + ", inverse " +
               fmt("%.3g", worst_inverse);
  return out;
}

Outcome hadamard_closure() {
  Outcome out;
  double worst = 0.0;
  const FractalSystem system = fixtures::quarter_cantor();
  for (std::size_t n = 6; n <= 8; ++n)
    for (Ordering ordering : {Ordering::obverse, Ordering::reverse}) {
      const TransformPlan plan = build_plan(system, n, ordering);
      const double scale = static_cast<double>(plan.size());
      const ComplexVector v = testing::random_vector(plan.size(), n);
      OpCounter counter;
      ComplexVector twice = adjoint_apply(plan, forward_apply(plan, v, counter), counter);
      for (std::size_t i = 0; i < v.size(); ++i) twice[i] -= scale * v[i];
      const double relative = testing::sup_norm(twice) / (scale * testing::sup_norm(v));
      worst = std::max(worst, relative);
      if (!(relative < 1e-8)) out.pass = false;
    }
  out.detail = "quarter-Cantor N=6..8: max |M*Mv - K^N v| / (K^N |v|) = " + fmt("%.3g", worst);
  return out;
}

Outcome block_identities() {
  Outcome out;
  double worst = 0.0;
  for (const auto& named : fixtures::all())
    for (std::size_t n = 1; n <= 5; ++n) {
      const BlockIdentityReport report = verify_block_identities(named.system, n);
      worst = std::max(worst, report.max_deviation());
      if (!(report.max_deviation() < 1e-10)) out.pass = false;
      if (named.name == "dyadic" && (report.max_deviation() != 0.0 || !report.phases_exact)) out.pass = false;
    }
  out.detail = "4 fixtures, N <= 5: max deviation " + fmt("%.3g", worst) + " (exact rational phases)";
  return out;
}

Outcome diagonal_recurrence() {
  Outcome out;
  std::size_t compared = 0;
  for (const auto& named : fixtures::all())
    for (std::size_t n = 2; n <= 5; ++n)
      for (Ordering ordering : {Ordering::obverse, Ordering::reverse}) {
        const TransformPlan plan = build_plan(named.system, n, ordering);
        for (std::size_t branch = 0; branch < named.system.branch_count(); ++branch) {
          const auto recurrence = diagonal_phases(plan, n, branch);
          if (recurrence != direct_diagonal_phases(named.system, n, branch, ordering)) out.pass = false;
          compared += recurrence.size();
        }
      }
  out.detail = std::to_string(compared) + " phases compared as exact rationals, N <= 5";
  return out;
}

Outcome operation_counts() {
  Outcome out;
  for (const auto& [name, system, top] :
       {std::tuple{"K=2", fixtures::dyadic(), std::size_t{10}}, std::tuple{"K=3", fixtures::sierpinski(), std::size_t{6}}}) {
    const std::size_t k = system.branch_count();
    double max_ratio = 0.0, ratio_at_4 = 0.0, ratio_at_top = 0.0;
    for (std::size_t n = 1; n <= top; ++n) {
      const TransformPlan plan = build_plan(system, n, Ordering::obverse);
      OpCounter counter;
      forward_apply(plan, testing::random_vector(plan.size(), n), counter);
      if (counter.total() > plan_op_count_bound(k, n, base_apply_cost(k))) out.pass = false;
      const double ratio = static_cast<double>(counter.total()) / (static_cast<double>(n) * static_cast<double>(plan.size()));
      max_ratio = std::max(max_ratio, ratio);
      if (n == 4) ratio_at_4 = ratio;
      if (n == top) ratio_at_top = ratio;
    }
    const double growth = ratio_at_top / ratio_at_4 - 1.0;
    if (growth > 0.05) out.pass = false;
    out.detail += std::string(out.detail.empty() ? "" : "; ") + name + " N<=" + std::to_string(top) + " max ratio " +
                  fmt("%.4f", max_ratio) + ", growth from N=4 " + fmt("%.2f%%", 100.0 * growth);
  }
  return out;
}

Outcome round_trip() {
  Outcome out;
  double worst = 0.0;
  for (const auto& named : fixtures::all()) {
    const std::size_t top = named.system.branch_count() == 2 ? 10 : 6;
    for (std::size_t n = 1; n <= top; ++n)
      for (Ordering ordering : {Ordering::obverse, Ordering::reverse}) {
        const TransformPlan plan = build_plan(named.system, n, ordering);
        const ComplexVector v = testing::random_vector(plan.size(), 7 * n);
        OpCounter counter;
        const ComplexVector back = inverse_apply(plan, forward_apply(plan, v, counter), counter);
        const double relative = max_abs_diff(back, v) / testing::sup_norm(v);
        worst = std::max(worst, relative);
        if (!(relative < 1e-8)) out.pass = false;
      }
  }
  out.detail = "4 fixtures, both orderings, N <= 10 (K=2), N <= 6 (K=3): max relative " + fmt("%.3g", worst);
  return out;
}

Outcome spectrum_search() {
  Outcome out;
  const SearchResult invertible = search_frequencies(fixtures::middle_third_spatial(), M1Class::invertible, 50);
  const SearchResult middle_hadamard = search_frequencies(fixtures::middle_third_spatial(), M1Class::hadamard, 50);
  const SpatialIfs quarter = fixtures::quarter_cantor_spatial();
  const SearchResult quarter_hadamard = search_frequencies(quarter, M1Class::hadamard, 50);
  ComplexMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  bool quarter_ok = false;
  if (quarter_hadamard.translations) {
    const FractalSystem system =
        build_system(quarter, FrequencyIfs::dual_of(quarter, *quarter_hadamard.translations), M1Class::hadamard);
    quarter_ok = (system.m1() - h).cwiseAbs().maxCoeff() == 0.0;
  }
  out.pass = invertible.translations.has_value() && !middle_hadamard.translations.has_value() && quarter_ok;
  out.detail = std::string("middle-third invertible ") + (invertible.translations ? "found" : "missing") +
               ", middle-third Hadamard (bound 50) " + (middle_hadamard.translations ? "found" : "exhausted") +
               ", quarter-Cantor M1 " + (quarter_ok ? "= [[1,1],[1,-1]]" : "wrong");
  return out;
}

Outcome orbit_identities() {
  Outcome out;
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<long> dist(-100, 100);
  std::size_t checks = 0;
  auto check = [&](bool ok) {
    ++checks;
    if (!ok) out.pass = false;
  };
  for (const auto& named : fixtures::all()) {
    const IfsPair& ifs = named.system.ifs();
    const std::size_t d = ifs.dim(), k = ifs.branch_count();
    const RationalMatrix a = ifs.spatial().a();
    const RationalMatrix b = to_rational(ifs.frequency().b_matrix());
    for (std::size_t n = 1; n <= 4; ++n) {
      RationalVector x(d), y(d);
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = dist(rng);
        y[i] = dist(rng);
      }
      const RationalVector xy = add(x, y);
      const RationalMatrix a_n = power(a, n), b_n = power(b, n);
      const RationalMatrix a_inv_n = to_rational(power(ifs.spatial().a_inverse(), n));
      for (std::size_t j = 0; j < point_count(k, n); ++j)
        for (Ordering ordering : {Ordering::obverse, Ordering::reverse}) {
          check(apply_composition(ifs, Kind::spatial, ordering, j, n, xy) ==
                add(apply_composition(ifs, Kind::spatial, ordering, j, n, x), multiply(a_n, y)));
          check(apply_composition(ifs, Kind::frequency, ordering, j, n, xy) ==
                add(apply_composition(ifs, Kind::frequency, ordering, j, n, x), multiply(b_n, y)));
          check(is_integral(multiply(a_inv_n, orbit_point(ifs, Kind::spatial, ordering, j, n))));
          check(is_integral(orbit_point(ifs, Kind::frequency, ordering, j, n)));
          if (n < 2) continue;
          const std::size_t block = point_count(k, n - 1);
          const std::size_t l = j / block, r = j % block;
          const RationalVector bl = to_rational(ifs.spatial().translations()[l]);
          const RationalVector cl = to_rational(ifs.frequency().translations()[l]);
          if (ordering == Ordering::obverse) {
            check(orbit_point(ifs, Kind::spatial, ordering, j, n) ==
                  add(orbit_point(ifs, Kind::spatial, ordering, r, n - 1), multiply(a_n, bl)));
            check(orbit_point(ifs, Kind::frequency, ordering, j, n) ==
                  add(orbit_point(ifs, Kind::frequency, ordering, r, n - 1), multiply(power(b, n - 1), cl)));
          } else {
            check(orbit_point(ifs, Kind::spatial, ordering, j, n) ==
                  ifs.spatial().apply(l, orbit_point(ifs, Kind::spatial, ordering, r, n - 1)));
            check(orbit_point(ifs, Kind::frequency, ordering, j, n) ==
                  add(multiply(b, orbit_point(ifs, Kind::frequency, ordering, r, n - 1)), cl));
          }
        }
    }
  }
  out.detail = std::to_string(checks) + " exact identities, 4 fixtures, N <= 4";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 classical FFT equivalence", classical_fft},   {"2 dense-oracle equivalence", dense_equivalence},
      {"3 Hadamard closure", hadamard_closure},     {"4 block identities", block_identities},
      {"5 diagonal recurrence", diagonal_recurrence},   {"6 operation counts", operation_counts},
      {"7 round trip", round_trip},                     {"8 spectrum search", spectrum_search},
      {"9 orbit identities", orbit_identities}};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s [%s] %s\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
