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

#ifndef FFFT_CLI_CONFIG_HPP
#define FFFT_CLI_CONFIG_HPP

// JSON system configuration:
//
//   {
//     "dim": 1,
//     "K": 2,
//     "a_inverse": [[4]],
//     "b": [[0], [2]],
//     "c": [[0], [1]],
//     "m1_class": "hadamard"
//   }
//
// "c" may be omitted when the file is an input to `search`. "a_inverse" is
// accepted either as a list of rows or as a flat row-major list.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ffft/errors.hpp"
#include "ffft/exact.hpp"
#include "ffft/fractal_transform.hpp"
#include "ffft/ifs_core.hpp"

namespace ffft::cli {

class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration; `line` is 1-based, 0 when unknown.
class ConfigError : public ValidationError {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SystemConfig {
  std::size_t dim = 0;
  std::size_t branch_count = 0;
  IntMatrix a_inverse;
  std::vector<IntVector> b;
  std::optional<std::vector<IntVector>> c;
  M1Class m1_class = M1Class::invertible;
};

SystemConfig parse_config(std::string_view text);
SystemConfig load_config(const std::filesystem::path& path);
std::string to_json(const SystemConfig& config);

SpatialIfs make_spatial(const SystemConfig& config);
// Requires "c".
FractalSystem make_system(const SystemConfig& config);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ffft::cli

#endif  // FFFT_CLI_CONFIG_HPP
