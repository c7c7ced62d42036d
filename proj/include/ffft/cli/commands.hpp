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

#ifndef FFFT_CLI_COMMANDS_HPP
#define FFFT_CLI_COMMANDS_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include "ffft/cli/config.hpp"
#include "ffft/fractal_transform.hpp"
#include "ffft/ifs_core.hpp"

namespace ffft::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kVerificationFailure = 2,
  kResourceCap = 3,
  kIoFailure = 4,
};

int cmd_points(const SystemConfig& config, std::size_t level, Kind kind, Ordering ordering, std::ostream& out);

struct TransformOptions {
  std::size_t level = 1;
  Ordering ordering = Ordering::obverse;
  bool inverse = false;
  std::string signal_path;
  // Empty: the signal goes to `out` and the summary to `log`.
  std::string out_path;
  bool dense_oracle = false;
};

int cmd_transform(const SystemConfig& config, const TransformOptions& options, std::ostream& out, std::ostream& log);

int cmd_verify(const SystemConfig& config, std::size_t max_level, std::ostream& out);

int cmd_bench(const SystemConfig& config, std::size_t min_level, std::size_t max_level, std::ostream& out);

// Writes the completed configuration to `out` on success.
int cmd_search(const SystemConfig& config, M1Class target, long bound, std::ostream& out, std::ostream& log);

// Runs `command`, mapping library exceptions to exit codes and printing
// their messages to `err`.
int run_guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace ffft::cli

#endif  // FFFT_CLI_COMMANDS_HPP
