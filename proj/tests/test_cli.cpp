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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "ffft/cli/commands.hpp"
#include "ffft/cli/config.hpp"
#include "ffft/cli/signal_io.hpp"
#include "ffft/errors.hpp"
#include "test_support.hpp"

namespace ffft::cli {
namespace {

constexpr const char* kDyadic = R"({
  "dim": 1,
  "K": 2,
  "a_inverse": [[2]],
  "b": [[0], [1]],
  "c": [[0], [1]],
  "m1_class": "hadamard"
})";

constexpr const char* kQuarterCantor = R"({"dim": 1, "K": 2, "a_inverse": [[4]], "b": [[0], [2]], "c": [[0], [1]]})";

std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ffft_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 0;
}

TEST(Config, ParsesAllFields) {
  const SystemConfig config = parse_config(kDyadic);
  EXPECT_EQ(config.dim, 1u);
  EXPECT_EQ(config.branch_count, 2u);
  EXPECT_EQ(config.a_inverse, (IntMatrix{{Integer(2)}}));
  ASSERT_TRUE(config.c.has_value());
  EXPECT_EQ(config.c->at(1), make_int_vector({1}));
  EXPECT_EQ(config.m1_class, M1Class::hadamard);
}

TEST(Config, FlatMatrixAccepted) {
  const SystemConfig config = parse_config(
      R"({"dim": 2, "K": 3, "a_inverse": [2, 0, 0, 2], "b": [[0,0],[1,0],[0,1]], "c": [[0,0],[1,0],[0,1]]})");
  EXPECT_EQ(config.a_inverse, (IntMatrix{{Integer(2), Integer(0)}, {Integer(0), Integer(2)}}));
  EXPECT_EQ(config.m1_class, M1Class::invertible);
}

TEST(Config, RoundTripsThroughJson) {
  const SystemConfig config = parse_config(kDyadic);
  const SystemConfig again = parse_config(to_json(config));
  EXPECT_EQ(again.a_inverse, config.a_inverse);
  EXPECT_EQ(again.b, config.b);
  EXPECT_EQ(again.c, config.c);
  EXPECT_EQ(again.m1_class, config.m1_class);
}

TEST(Config, LinePreciseErrors) {
  EXPECT_EQ(error_line("{\n  \"dim\": 1,\n  \"K\": 2,\n  \"a_inverse\": [[2]],\n  \"b\": [[0], [1], [2]]\n}"), 5u);
  EXPECT_EQ(error_line("{\n  \"dim\": 1,\n  \"K\": 2,\n  \"a_inverse\": [[2]],\n  \"b\": [[1], [0]]\n}"), 5u);
  EXPECT_EQ(error_line("{\n  \"dim\": 1,\n  \"K\": 2,\n  \"a_inverse\": [[0]],\n  \"b\": [[0], [1]]\n}"), 4u);
  EXPECT_EQ(error_line("{\n  \"dim\": 1,\n  \"K\": 2\n  \"a_inverse\": [[2]]\n}"), 4u);
  EXPECT_EQ(error_line("{\n  \"dim\": 1,\n  \"K\": 2,\n  \"a_inverse\": [[2]],\n  \"b\": [[0], [1]],\n"
                       "  \"m1_class\": \"unitary\"\n}"),
            6u);
  EXPECT_THROW(parse_config("{\"K\": 2}"), ConfigError);
}

TEST(Config, SystemRequiresTranslations) {
  const SystemConfig config = parse_config(R"({"dim": 1, "K": 2, "a_inverse": [[3]], "b": [[0], [2]]})");
  EXPECT_NO_THROW(make_spatial(config));
  EXPECT_THROW(make_system(config), ValidationError);
}

TEST(Config, MissingFileIsIoError) {
  EXPECT_THROW(load_config(temp_path("does-not-exist.json")), IoError);
}

TEST(Signal, ParseAndFormat) {
  const ComplexVector v = parse_signal("1,0\n\n-2.5,3e-3\n");
  EXPECT_EQ(v, (ComplexVector{Complex(1, 0), Complex(-2.5, 3e-3)}));
  EXPECT_THROW(parse_signal("1,0\n1;2\n"), ValidationError);
  try {
    parse_signal("1,0\n2,x\n");
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Signal, FormatIsBitExact) {
  const ComplexVector v = testing::random_vector(64, 99);
  const std::string text = format_signal(v);
  EXPECT_EQ(parse_signal(text), v);
  EXPECT_EQ(format_signal(parse_signal(text)), text);
}

TEST(Commands, PointsTable) {
  std::ostringstream out;
  EXPECT_EQ(cmd_points(parse_config(kDyadic), 2, Kind::spatial, Ordering::reverse, out), kOk);
  const std::string text = out.str();
  EXPECT_NE(text.find("1\t[1 0]\t1/4\t0.25"), std::string::npos);
  EXPECT_NE(text.find("3\t[1 1]\t3/4\t0.75"), std::string::npos);
  std::ostringstream freq;
  cmd_points(parse_config(kQuarterCantor), 2, Kind::frequency, Ordering::obverse, freq);
  EXPECT_NE(freq.str().find("2\t[0 1]\t4\t"), std::string::npos);
}

TEST(Commands, TransformRoundTripThroughFiles) {
  const SystemConfig config = parse_config(kDyadic);
  const auto in = temp_path("signal.txt"), fwd = temp_path("forward.txt"), back = temp_path("back.txt");
  const ComplexVector v = testing::random_vector(1024, 5);
  save_signal(in, v);
  std::ostringstream out, log;
  TransformOptions options{10, Ordering::obverse, false, in.string(), fwd.string(), false};
  ASSERT_EQ(cmd_transform(config, options, out, log), kOk);
  EXPECT_NE(out.str().find("operations: "), std::string::npos);
  EXPECT_NE(out.str().find("wall_time_s: "), std::string::npos);
  options.inverse = true;
  options.signal_path = fwd.string();
  options.out_path = back.string();
  ASSERT_EQ(cmd_transform(config, options, out, log), kOk);
  EXPECT_LT(max_abs_diff(load_signal(back), v), 1e-8 * testing::sup_norm(v));
}

TEST(Commands, TransformDeltaAndOracle) {
  const SystemConfig config = parse_config(kDyadic);
  const auto in = temp_path("delta.txt");
  ComplexVector delta(32, 0.0);
  delta[0] = 1.0;
  save_signal(in, delta);
  std::ostringstream out, log;
  const TransformOptions options{5, Ordering::obverse, false, in.string(), "", true};
  ASSERT_EQ(cmd_transform(config, options, out, log), kOk);
  EXPECT_EQ(parse_signal(out.str()), ComplexVector(32, 1.0));
  const std::string summary = log.str();
  const auto pos = summary.find("dense_max_deviation: ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LT(std::stod(summary.substr(pos + 21)), 1e-9);
}

TEST(Commands, TransformLengthMismatch) {
  const auto in = temp_path("short.txt");
  save_signal(in, ComplexVector(3, 1.0));
  std::ostringstream out, log;
  const TransformOptions options{2, Ordering::obverse, false, in.string(), "", false};
  EXPECT_EQ(run_guarded([&] { return cmd_transform(parse_config(kDyadic), options, out, log); }, log),
            kValidationFailure);
}

TEST(Commands, VerifyPassesOnFixtures) {
  std::ostringstream out;
  EXPECT_EQ(cmd_verify(parse_config(kDyadic), 5, out), kOk);
  std::ostringstream hadamard;
  EXPECT_EQ(cmd_verify(parse_config(kQuarterCantor), 5, hadamard), kOk);
  EXPECT_NE(hadamard.str().find("hadamard"), std::string::npos);
  EXPECT_EQ(hadamard.str().find("FAIL"), std::string::npos);
}

TEST(Commands, VerifySingularFails) {
  std::ostringstream out;
  const SystemConfig config = parse_config(R"({"dim": 1, "K": 2, "a_inverse": [[3]], "b": [[0], [2]], "c": [[0], [3]]})");
  EXPECT_EQ(cmd_verify(config, 3, out), kVerificationFailure);
  EXPECT_NE(out.str().find("M₁ singular"), std::string::npos);
}

TEST(Commands, VerifyCapIsResourceError) {
  std::ostringstream out;
  EXPECT_EQ(run_guarded([&] { return cmd_verify(parse_config(kDyadic), 13, out); }, out), kResourceCap);
}

TEST(Commands, BenchColumns) {
  std::ostringstream out;
  ASSERT_EQ(cmd_bench(parse_config(kDyadic), 1, 3, out), kOk);
  std::istringstream lines(out.str());
  std::string header, n1, n2, n3;
  std::getline(lines, header);
  std::getline(lines, n1);
  std::getline(lines, n2);
  std::getline(lines, n3);
  EXPECT_EQ(header, "N,measured,bound,ratio,dense_ops");
  EXPECT_EQ(n2.substr(0, 2), "2,");
  EXPECT_NE(n2.find(",28,"), std::string::npos);
  EXPECT_NE(n3.find(",88,"), std::string::npos);
}

TEST(Commands, SearchEmitsCompleteConfig) {
  std::ostringstream out, log;
  const SystemConfig spatial_only = parse_config(R"({"dim": 1, "K": 2, "a_inverse": [[3]], "b": [[0], [2]]})");
  ASSERT_EQ(cmd_search(spatial_only, M1Class::invertible, 50, out, log), kOk);
  const SystemConfig completed = parse_config(out.str());
  ASSERT_TRUE(completed.c.has_value());
  EXPECT_EQ(completed.c->at(1), make_int_vector({1}));
  EXPECT_NO_THROW(make_system(completed));

  std::ostringstream none, why;
  EXPECT_EQ(cmd_search(spatial_only, M1Class::hadamard, 50, none, why), kVerificationFailure);
  EXPECT_TRUE(none.str().empty());
  EXPECT_NE(why.str().find("exhausted"), std::string::npos);
}

TEST(Commands, DeterministicOutput) {
  std::ostringstream a, b;
  cmd_bench(parse_config(kQuarterCantor), 1, 6, a);
  cmd_bench(parse_config(kQuarterCantor), 1, 6, b);
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace ffft::cli
