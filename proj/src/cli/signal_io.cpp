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

#include "ffft/cli/signal_io.hpp"

#include <charconv>
#include <cstdio>

#include "ffft/cli/config.hpp"
#include "ffft/errors.hpp"

namespace ffft::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
    throw ValidationError("signal line " + std::to_string(line) + ": cannot parse '" + std::string(field) +
                          "' as a number");
  return value;
}

}  // namespace

ComplexVector parse_signal(std::string_view text) {
  ComplexVector out;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    const auto end = text.find('\n');
    std::string_view row = trim(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos)
      throw ValidationError("signal line " + std::to_string(line) + ": expected \"re,im\"");
    out.emplace_back(parse_double(row.substr(0, comma), line), parse_double(row.substr(comma + 1), line));
  }
  return out;
}

std::string format_signal(const ComplexVector& signal) {
  std::string out;
  char buffer[96];
  for (const auto& z : signal) {
    const int n = std::snprintf(buffer, sizeof buffer, "%.17g,%.17g\n", z.real(), z.imag());
    out.append(buffer, static_cast<std::size_t>(n));
  }
  return out;
}

ComplexVector load_signal(const std::filesystem::path& path) { return parse_signal(read_file(path)); }

void save_signal(const std::filesystem::path& path, const ComplexVector& signal) {
  write_file(path, format_signal(signal));
}

}  // namespace ffft::cli
