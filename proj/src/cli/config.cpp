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

#include "ffft/cli/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ffft::cli {
namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Line of the first occurrence of "key" in the raw text.
std::size_t line_of_key(std::string_view text, std::string_view key) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

class FieldReader {
 public:
  FieldReader(std::string_view text, const json& root) : text_(text), root_(root) {}

  [[noreturn]] void fail(std::string_view key, const std::string& message) const {
    throw ConfigError(line_of_key(text_, key), "field \"" + std::string(key) + "\": " + message);
  }

  const json& require(std::string_view key) const {
    const auto it = root_.find(std::string(key));
    if (it == root_.end()) throw ConfigError(0, "missing required field \"" + std::string(key) + "\"");
    return *it;
  }

  std::int64_t integer(std::string_view key, const json& value) const {
    if (!value.is_number_integer()) fail(key, "expected an integer, got " + value.dump());
    return value.get<std::int64_t>();
  }

  IntVector vector(std::string_view key, const json& value, std::size_t dim) const {
    if (!value.is_array()) fail(key, "expected an array of integers, got " + value.dump());
    if (value.size() != dim)
      fail(key, "vector " + value.dump() + " has length " + std::to_string(value.size()) + ", expected " +
                    std::to_string(dim));
    IntVector out;
    for (const auto& x : value) out.emplace_back(integer(key, x));
    return out;
  }

  std::vector<IntVector> translations(std::string_view key, std::size_t count, std::size_t dim) const {
    const json& value = require(key);
    if (!value.is_array()) fail(key, "expected a list of " + std::to_string(count) + " vectors");
    if (value.size() != count)
      fail(key, "expected " + std::to_string(count) + " vectors, got " + std::to_string(value.size()));
    std::vector<IntVector> out;
    for (const auto& v : value) out.push_back(vector(key, v, dim));
    if (!is_zero(out[0])) fail(key, "the first vector must be zero");
    return out;
  }

 private:
  std::string_view text_;
  const json& root_;
};

json to_json_vector(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.convert_to<std::int64_t>());
  return out;
}

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : ValidationError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

SystemConfig parse_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError(1, "configuration must be a JSON object");
  const FieldReader reader(text, root);

  SystemConfig config;
  const std::int64_t dim = reader.integer("dim", reader.require("dim"));
  if (dim < 1) reader.fail("dim", "must be positive");
  config.dim = static_cast<std::size_t>(dim);
  const std::int64_t k = reader.integer("K", reader.require("K"));
  if (k < 2) reader.fail("K", "at least two maps are required");
  config.branch_count = static_cast<std::size_t>(k);

  const json& a = reader.require("a_inverse");
  if (!a.is_array()) reader.fail("a_inverse", "expected a matrix");
  config.a_inverse = IntMatrix(config.dim, config.dim);
  if (a.size() == config.dim * config.dim && (a.empty() || !a[0].is_array())) {
    for (std::size_t i = 0; i < a.size(); ++i)
      config.a_inverse(i / config.dim, i % config.dim) = reader.integer("a_inverse", a[i]);
  } else {
    if (a.size() != config.dim) reader.fail("a_inverse", "expected " + std::to_string(config.dim) + " rows");
    for (std::size_t r = 0; r < config.dim; ++r) {
      const IntVector row = reader.vector("a_inverse", a[r], config.dim);
      for (std::size_t c = 0; c < config.dim; ++c) config.a_inverse(r, c) = row[c];
    }
  }
  if (determinant(config.a_inverse) == 0) reader.fail("a_inverse", "matrix is singular");

  config.b = reader.translations("b", config.branch_count, config.dim);
  if (root.contains("c")) config.c = reader.translations("c", config.branch_count, config.dim);

  if (root.contains("m1_class")) {
    const json& cls = root["m1_class"];
    if (!cls.is_string()) reader.fail("m1_class", "expected \"invertible\" or \"hadamard\"");
    try {
      config.m1_class = parse_m1_class(cls.get<std::string>());
    } catch (const ValidationError& e) {
      reader.fail("m1_class", e.what());
    }
  }
  return config;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("failed writing " + path.string());
}

SystemConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_config(text);
  } catch (const ConfigError& e) {
    throw ConfigError(e.line(), path.string() + ": " + std::string(e.what()));
  }
}

std::string to_json(const SystemConfig& config) {
  nlohmann::ordered_json root;
  root["dim"] = config.dim;
  root["K"] = config.branch_count;
  json a = json::array();
  for (std::size_t r = 0; r < config.a_inverse.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < config.a_inverse.cols(); ++c)
      row.push_back(config.a_inverse(r, c).convert_to<std::int64_t>());
    a.push_back(std::move(row));
  }
  root["a_inverse"] = std::move(a);
  json b = json::array();
  for (const auto& v : config.b) b.push_back(to_json_vector(v));
  root["b"] = std::move(b);
  if (config.c) {
    json c = json::array();
    for (const auto& v : *config.c) c.push_back(to_json_vector(v));
    root["c"] = std::move(c);
  }
  root["m1_class"] = std::string(to_string(config.m1_class));
  std::string text = "{\n";
  std::size_t index = 0;
  for (const auto& [key, value] : root.items()) {
    text += "  " + json(key).dump() + ": " + value.dump();
    text += ++index < root.size() ? ",\n" : "\n";
  }
  return text + "}\n";
}

SpatialIfs make_spatial(const SystemConfig& config) { return SpatialIfs(config.a_inverse, config.b); }

FractalSystem make_system(const SystemConfig& config) {
  if (!config.c) throw ConfigError(0, "missing required field \"c\"");
  const SpatialIfs spatial = make_spatial(config);
  return build_system(spatial, FrequencyIfs::dual_of(spatial, *config.c), config.m1_class);
}

}  // namespace ffft::cli
