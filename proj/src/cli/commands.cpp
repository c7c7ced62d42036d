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

#include "ffft/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "ffft/cli/signal_io.hpp"
#include "ffft/errors.hpp"
#include "ffft/spectrum_search.hpp"

namespace ffft::cli {
namespace {

constexpr double kBlockTolerance = 1e-10;
constexpr double kDenseTolerance = 1e-9;
constexpr double kRoundTripTolerance = 1e-8;
constexpr std::uint64_t kSeed = 0x5eed5eedULL;

ComplexVector random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexVector v(n);
  for (auto& z : v) z = {dist(rng), dist(rng)};
  return v;
}

ComplexVector to_vector(const Eigen::VectorXcd& v) { return ComplexVector(v.data(), v.data() + v.size()); }

Eigen::VectorXcd to_eigen(const ComplexVector& v) {
  return Eigen::Map<const Eigen::VectorXcd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::string format_double(double x, int digits = 6) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
  return buffer;
}

double relative_residual(const ComplexVector& actual, const ComplexVector& expected) {
  const double scale = std::max(max_abs(expected), 1e-300);
  return max_abs_diff(actual, expected) / scale;
}

void print_warnings(const FractalSystem& system, std::ostream& log) {
  for (const auto& w : system.spatial().warnings()) log << "warning: " << w << '\n';
}

}  // namespace

int cmd_points(const SystemConfig& config, std::size_t level, Kind kind, Ordering ordering, std::ostream& out) {
  const FractalSystem system = make_system(config);
  const OrderedPointSet set = generate_point_set(system.ifs(), kind, ordering, level);
  out << "# kind=" << to_string(kind) << " ordering=" << to_string(ordering) << " level=" << level
      << " points=" << set.points.size() << (set.has_duplicates ? " duplicates=yes" : " duplicates=no") << '\n';
  out << "index\tdigits\texact\tapprox\n";
  for (std::size_t j = 0; j < set.points.size(); ++j) {
    const auto digits = base_digits(j, system.branch_count(), level);
    out << j << "\t[";
    for (std::size_t n = 0; n < digits.size(); ++n) out << (n ? " " : "") << digits[n];
    out << "]\t";
    const auto& p = set.points[j];
    if (p.size() == 1) {
      out << to_string(p[0]) << '\t' << format_double(p[0].convert_to<double>(), 17);
    } else {
      out << to_string(p) << "\t(";
      for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << format_double(p[i].convert_to<double>(), 17);
      out << ')';
    }
    out << '\n';
  }
  return kOk;
}

int cmd_transform(const SystemConfig& config, const TransformOptions& options, std::ostream& out, std::ostream& log) {
  const FractalSystem system = make_system(config);
  const TransformPlan plan = build_plan(system, options.level, options.ordering);
  const ComplexVector input = load_signal(options.signal_path);
  if (input.size() != plan.size())
    throw ShapeError("signal has " + std::to_string(input.size()) + " samples, expected K^N = " +
                     std::to_string(plan.size()));

  OpCounter counter;
  const auto start = std::chrono::steady_clock::now();
  const ComplexVector output =
      options.inverse ? inverse_apply(plan, input, counter) : forward_apply(plan, input, counter);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  OpCounter scratch;
  const ComplexVector back =
      options.inverse ? forward_apply(plan, output, scratch) : inverse_apply(plan, output, scratch);

  std::ostream& summary = options.out_path.empty() ? log : out;
  print_warnings(system, log);
  summary << "direction: " << (options.inverse ? "inverse" : "forward") << '\n';
  summary << "ordering: " << to_string(options.ordering) << '\n';
  summary << "points: " << plan.size() << '\n';
  summary << "multiplications: " << counter.multiplications << '\n';
  summary << "additions: " << counter.additions << '\n';
  summary << "operations: " << counter.total() << '\n';
  summary << "wall_time_s: " << format_double(seconds) << '\n';
  summary << "roundtrip_residual: " << format_double(relative_residual(back, input)) << '\n';

  int status = kOk;
  if (options.dense_oracle) {
    const ComplexMatrix dense = dense_matrix(system, options.level, options.ordering);
    const Eigen::VectorXcd x = to_eigen(input);
    const ComplexVector expected =
        options.inverse ? to_vector(dense.fullPivLu().solve(x)) : to_vector(dense * x);
    const double deviation = max_abs_diff(output, expected);
    summary << "dense_max_deviation: " << format_double(deviation) << '\n';
    if (!(deviation < kDenseTolerance)) status = kVerificationFailure;
  }

  if (options.out_path.empty())
    out << format_signal(output);
  else
    save_signal(options.out_path, output);
  return status;
}

int cmd_verify(const SystemConfig& config, std::size_t max_level, std::ostream& out) {
  point_count(config.branch_count, max_level, kOracleMaxPoints);
  std::optional<FractalSystem> built;
  try {
    built.emplace(make_system(config));
  } catch (const NumericalError& e) {
    out << "build: " << e.what() << '\n' << "FAIL\n";
    return kVerificationFailure;
  }
  const FractalSystem& system = *built;
  const std::size_t k = system.branch_count();
  print_warnings(system, out);
  out << "system: K=" << k << " dim=" << system.dim() << " m1_class=" << to_string(system.m1_class()) << '\n';

  bool all_ok = true;
  auto verdict = [&](bool ok) {
    all_ok = all_ok && ok;
    return ok ? "PASS" : "FAIL";
  };

  for (std::size_t level = 1; level <= max_level; ++level) {
    const BlockIdentityReport blocks = verify_block_identities(system, level);
    out << "N=" << level << " block_identities permutation=" << format_double(blocks.permutation_deviation)
        << " obverse=" << format_double(blocks.obverse_block_deviation)
        << " reverse=" << format_double(blocks.reverse_block_deviation)
        << " exact=" << (blocks.phases_exact ? "yes" : "no") << ' '
        << verdict(blocks.max_deviation() < kBlockTolerance) << '\n';

    for (Ordering ordering : {Ordering::obverse, Ordering::reverse}) {
      const TransformPlan plan = build_plan(system, level, ordering);
      const ComplexMatrix dense = dense_matrix(system, level, ordering);
      const ComplexVector v = random_signal(plan.size(), kSeed + level);
      OpCounter counter;
      const ComplexVector fwd = forward_apply(plan, v, counter);
      const double dense_dev = max_abs_diff(fwd, to_vector(dense * to_eigen(v)));
      const ComplexVector back = inverse_apply(plan, fwd, counter);
      const double round_trip = relative_residual(back, v);

      bool recurrence_exact = true;
      for (std::size_t n = 2; n <= level; ++n)
        for (std::size_t b = 0; b < k; ++b)
          recurrence_exact = recurrence_exact && diagonal_phases(plan, n, b) == direct_diagonal_phases(system, n, b, ordering);

      out << "N=" << level << ' ' << to_string(ordering) << " dense_dev=" << format_double(dense_dev)
          << " roundtrip=" << format_double(round_trip)
          << " diagonal_recurrence=" << (recurrence_exact ? "exact" : "MISMATCH") << ' '
          << verdict(dense_dev < kDenseTolerance && round_trip < kRoundTripTolerance && recurrence_exact) << '\n';

      if (system.m1_class() == M1Class::hadamard) {
        const double scale = static_cast<double>(plan.size());
        const ComplexMatrix gram = dense.adjoint() * dense;
        const double dense_gram = (gram - scale * ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
        ComplexVector twice = adjoint_apply(plan, fwd, counter);
        for (std::size_t i = 0; i < twice.size(); ++i) twice[i] -= scale * v[i];
        const double fast_gram = max_abs(twice) / (scale * max_abs(v));
        out << "N=" << level << ' ' << to_string(ordering) << " hadamard dense=" << format_double(dense_gram)
            << " fast=" << format_double(fast_gram) << ' '
            << verdict(dense_gram < 1e-8 * scale && fast_gram < 1e-8) << '\n';
      }
    }
  }
  out << (all_ok ? "PASS" : "FAIL") << '\n';
  return all_ok ? kOk : kVerificationFailure;
}

int cmd_bench(const SystemConfig& config, std::size_t min_level, std::size_t max_level, std::ostream& out) {
  if (min_level < 1 || min_level > max_level) throw ValidationError("bench needs 1 <= from <= level");
  const FractalSystem system = make_system(config);
  const std::size_t k = system.branch_count();
  point_count(k, max_level);
  const std::uint64_t p1 = base_apply_cost(k);
  bool within_bound = true;
  out << "N,measured,bound,ratio,dense_ops\n";
  for (std::size_t level = min_level; level <= max_level; ++level) {
    const TransformPlan plan = build_plan(system, level, Ordering::obverse);
    const ComplexVector v = random_signal(plan.size(), kSeed);
    OpCounter counter;
    forward_apply(plan, v, counter);
    const std::uint64_t bound = plan_op_count_bound(k, level, p1);
    const auto n = static_cast<std::uint64_t>(plan.size());
    const double ratio = static_cast<double>(counter.total()) / (static_cast<double>(level) * static_cast<double>(n));
    const std::uint64_t dense_ops = n * n + n * (n - 1);
    within_bound = within_bound && counter.total() <= bound;
    out << level << ',' << counter.total() << ',' << bound << ',' << format_double(ratio, 8) << ',' << dense_ops
        << '\n';
  }
  return within_bound ? kOk : kVerificationFailure;
}

int cmd_search(const SystemConfig& config, M1Class target, long bound, std::ostream& out, std::ostream& log) {
  const SpatialIfs spatial = make_spatial(config);
  const SearchResult result = search_frequencies(spatial, target, bound);
  for (const auto& w : spatial.warnings()) log << "warning: " << w << '\n';
  for (const auto& w : result.warnings) log << "warning: " << w << '\n';
  log << "hypothesis (A b_j - A b_k non-integral): " << (result.hypothesis_holds ? "holds" : "violated") << '\n';
  if (!result.translations) {
    log << "search failed: " << result.failure << '\n';
    return kVerificationFailure;
  }
  for (const auto& [i, j] : result.coset_equivalences)
    log << "note: c_" << i << " and c_" << j << " are congruent modulo B Z^d\n";
  SystemConfig completed = config;
  completed.c = *result.translations;
  completed.m1_class = target;
  out << to_json(completed);
  return kOk;
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  }
}

}  // namespace ffft::cli
