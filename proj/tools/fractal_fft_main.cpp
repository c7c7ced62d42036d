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

#include <cstddef>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ffft/cli/commands.hpp"
#include "ffft/cli/config.hpp"

namespace {

struct Options {
  std::string config;
  std::size_t level = 1;
  std::size_t from = 1;
  std::string ordering = "obverse";
  std::string kind = "spatial";
  std::string signal;
  std::string out;
  std::string oracle;
  std::string target = "invertible";
  long bound = 50;
};

}  // namespace

int main(int argc, char** argv) {
  using namespace ffft;
  using namespace ffft::cli;

  CLI::App app{"Fast transforms on fractal point sets generated by affine iterated function systems"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* sub) { sub->add_option("--config", o.config, "system configuration (JSON)")->required(); };
  auto add_level = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--level", o.level, help)->required()->check(CLI::PositiveNumber);
  };
  auto add_ordering = [&](CLI::App* sub) {
    sub->add_option("--ordering", o.ordering, "obverse|reverse")->check(CLI::IsMember({"obverse", "reverse"}));
  };

  auto* points = app.add_subcommand("points", "list the ordered point set at a level");
  add_config(points);
  add_level(points, "composition depth N");
  add_ordering(points);
  points->add_option("--kind", o.kind, "spatial|frequency")->check(CLI::IsMember({"spatial", "frequency"}));

  auto* forward = app.add_subcommand("forward", "apply M_N to a signal");
  auto* inverse = app.add_subcommand("inverse", "apply M_N^-1 to a signal");
  for (auto* sub : {forward, inverse}) {
    add_config(sub);
    add_level(sub, "composition depth N");
    add_ordering(sub);
    sub->add_option("--signal", o.signal, "input signal, one \"re,im\" per line")->required();
    sub->add_option("--out", o.out, "output signal path (stdout when omitted)");
    sub->add_option("--oracle", o.oracle, "compare against a dense oracle")->check(CLI::IsMember({"dense"}));
  }

  auto* verify = app.add_subcommand("verify", "check block identities, recurrences and round trips up to a level");
  add_config(verify);
  add_level(verify, "largest level checked");

  auto* bench = app.add_subcommand("bench", "count operations of the fast apply per level");
  add_config(bench);
  add_level(bench, "largest level measured");
  bench->add_option("--from", o.from, "smallest level measured")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "choose frequency translations for a spatial system");
  add_config(search);
  search->add_option("--target", o.target, "invertible|hadamard")->check(CLI::IsMember({"invertible", "hadamard"}));
  search->add_option("--bound", o.bound, "max |c|_inf for the hadamard search")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidationFailure;
  }

  return run_guarded(
      [&]() -> int {
        const SystemConfig config = load_config(o.config);
        if (points->parsed())
          return cmd_points(config, o.level, parse_kind(o.kind), parse_ordering(o.ordering), std::cout);
        if (forward->parsed() || inverse->parsed()) {
          TransformOptions t;
          t.level = o.level;
          t.ordering = parse_ordering(o.ordering);
          t.inverse = inverse->parsed();
          t.signal_path = o.signal;
          t.out_path = o.out;
          t.dense_oracle = o.oracle == "dense";
          return cmd_transform(config, t, std::cout, std::cerr);
        }
        if (verify->parsed()) return cmd_verify(config, o.level, std::cout);
        if (bench->parsed()) return cmd_bench(config, o.from, o.level, std::cout);
        return cmd_search(config, parse_m1_class(o.target), o.bound, std::cout, std::cerr);
      },
      std::cerr);
}
