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

#include "ffft/fixtures.hpp"

namespace ffft::fixtures {
namespace {

std::vector<IntVector> scalars(std::initializer_list<std::int64_t> values) {
  std::vector<IntVector> out;
  for (auto v : values) out.push_back(make_int_vector({v}));
  return out;
}

FractalSystem one_dimensional(std::int64_t scale, std::initializer_list<std::int64_t> b,
                              std::initializer_list<std::int64_t> c, M1Class required) {
  SpatialIfs spatial(IntMatrix{{Integer(scale)}}, scalars(b));
  return build_system(spatial, FrequencyIfs::dual_of(spatial, scalars(c)), required);
}

}  // namespace

FractalSystem dyadic() { return one_dimensional(2, {0, 1}, {0, 1}, M1Class::hadamard); }

FractalSystem quarter_cantor() { return one_dimensional(4, {0, 2}, {0, 1}, M1Class::hadamard); }

FractalSystem middle_third() { return one_dimensional(3, {0, 2}, {0, 1}, M1Class::invertible); }

FractalSystem sierpinski() {
  std::vector<IntVector> v{make_int_vector({0, 0}), make_int_vector({1, 0}), make_int_vector({0, 1})};
  SpatialIfs spatial(IntMatrix{{Integer(2), Integer(0)}, {Integer(0), Integer(2)}}, v);
  return build_system(spatial, FrequencyIfs::dual_of(spatial, v), M1Class::invertible);
}

SpatialIfs middle_third_spatial() { return SpatialIfs(IntMatrix{{Integer(3)}}, scalars({0, 2})); }

SpatialIfs quarter_cantor_spatial() { return SpatialIfs(IntMatrix{{Integer(4)}}, scalars({0, 2})); }

std::vector<NamedSystem> all() {
  return {{"dyadic", dyadic()},
          {"quarter-cantor", quarter_cantor()},
          {"middle-third", middle_third()},
          {"sierpinski", sierpinski()}};
}

}  // namespace ffft::fixtures
