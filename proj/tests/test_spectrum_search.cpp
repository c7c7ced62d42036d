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

#include "ffft/errors.hpp"
#include "ffft/fixtures.hpp"
#include "ffft/spectrum_search.hpp"

namespace ffft {
namespace {

std::vector<IntVector> ints(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) out.push_back(make_int_vector(r));
  return out;
}

TEST(Cosets, Examples) {
  EXPECT_EQ(coset_representatives(IntMatrix{{Integer(2)}}).representatives, ints({{0}, {1}}));
  EXPECT_EQ(coset_representatives(IntMatrix{{Integer(3)}}).representatives, ints({{0}, {1}, {2}}));
  EXPECT_EQ(coset_representatives(IntMatrix{{Integer(2), Integer(0)}, {Integer(0), Integer(2)}}).representatives,
            ints({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
}

TEST(Cosets, CountAndIncongruence) {
  const IntMatrix b{{Integer(2), Integer(1)}, {Integer(-1), Integer(3)}};
  const CosetSystem cosets = coset_representatives(b);
  ASSERT_EQ(cosets.representatives.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) EXPECT_FALSE(congruent(b, cosets.representatives[i], cosets.representatives[j]));
  EXPECT_TRUE(congruent(b, make_int_vector({0, 0}), make_int_vector({2, -1})));
}

TEST(Cosets, Errors) {
  EXPECT_THROW(coset_representatives(IntMatrix{{Integer(0)}}), ValidationError);
  EXPECT_THROW(coset_representatives(IntMatrix{{Integer(20000)}}), ResourceError);
}

TEST(CharacterMatrix, MiddleThird) {
  const SpatialIfs spatial = fixtures::middle_third_spatial();
  const ComplexMatrix m = character_matrix(spatial, coset_representatives(IntMatrix{{Integer(3)}}));
  ASSERT_EQ(m.rows(), 3);
  ASSERT_EQ(m.cols(), 2);
  for (int r = 0; r < 3; ++r) {
    EXPECT_EQ(m(r, 0), Complex(1.0, 0.0));
    EXPECT_LT(std::abs(m(r, 1) - std::polar(1.0, -4.0 * std::numbers::pi * r / 3.0)), 1e-15);
  }
  EXPECT_LT(std::abs(m.col(0).dot(m.col(1))), 1e-12);
}

TEST(CharacterMatrix, Dyadic) {
  const FractalSystem dyadic = fixtures::dyadic();
  const SpatialIfs& spatial = dyadic.spatial();
  ComplexMatrix expected(2, 2);
  expected << 1.0, 1.0, 1.0, -1.0;
  EXPECT_EQ(character_matrix(spatial, coset_representatives(IntMatrix{{Integer(2)}})), expected);
}

TEST(CharacterMatrix, ColumnsOrthogonalUnderHypothesis) {
  const SpatialIfs spatial(IntMatrix{{Integer(3), Integer(1)}, {Integer(0), Integer(3)}},
                           ints({{0, 0}, {1, 0}, {0, 1}, {1, 2}}));
  const ComplexMatrix m = character_matrix(spatial, coset_representatives(transpose(spatial.a_inverse())));
  for (Eigen::Index i = 0; i < m.cols(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) EXPECT_LT(std::abs(m.col(i).dot(m.col(j))), 1e-12);
}

TEST(Search, MiddleThirdInvertible) {
  const SearchResult result = search_frequencies(fixtures::middle_third_spatial(), M1Class::invertible, 50);
  ASSERT_TRUE(result.translations.has_value());
  EXPECT_TRUE(result.hypothesis_holds);
  EXPECT_EQ(*result.translations, ints({{0}, {1}}));
}

TEST(Search, MiddleThirdHadamardExhausts) {
  const SearchResult result = search_frequencies(fixtures::middle_third_spatial(), M1Class::hadamard, 50);
  EXPECT_FALSE(result.translations.has_value());
  EXPECT_NE(result.failure.find("exhausted"), std::string::npos);
  EXPECT_NE(result.failure.find("50"), std::string::npos);
}

TEST(Search, QuarterCantorHadamard) {
  const SpatialIfs spatial = fixtures::quarter_cantor_spatial();
  const SearchResult result = search_frequencies(spatial, M1Class::hadamard, 10);
  ASSERT_TRUE(result.translations.has_value());
  EXPECT_EQ(*result.translations, ints({{0}, {1}}));
  const FractalSystem system = build_system(spatial, FrequencyIfs::dual_of(spatial, *result.translations), M1Class::hadamard);
  ComplexMatrix expected(2, 2);
  expected << 1.0, 1.0, 1.0, -1.0;
  EXPECT_EQ(system.m1(), expected);
}

TEST(Search, SierpinskiInvertibleButNoRealHadamard) {
  const FractalSystem sierpinski = fixtures::sierpinski();
  const SpatialIfs& spatial = sierpinski.spatial();
  const SearchResult invertible = search_frequencies(spatial, M1Class::invertible, 3);
  ASSERT_TRUE(invertible.translations.has_value());
  EXPECT_TRUE(is_zero(invertible.translations->front()));
  EXPECT_NO_THROW(build_system(spatial, FrequencyIfs::dual_of(spatial, *invertible.translations), M1Class::invertible));
  // Every phase is 0 or 1/2, and no 3x3 matrix of signs is Hadamard.
  EXPECT_FALSE(search_frequencies(spatial, M1Class::hadamard, 3).translations.has_value());
}

TEST(Search, HypothesisViolationWarns) {
  const SpatialIfs spatial(IntMatrix{{Integer(2)}}, ints({{0}, {2}}));
  const SearchResult result = search_frequencies(spatial, M1Class::invertible, 5);
  EXPECT_FALSE(result.hypothesis_holds);
  EXPECT_FALSE(result.warnings.empty());
  EXPECT_FALSE(result.translations.has_value());
}

TEST(Search, Deterministic) {
  const FractalSystem sierpinski = fixtures::sierpinski();
  const SpatialIfs& spatial = sierpinski.spatial();
  EXPECT_EQ(search_frequencies(spatial, M1Class::invertible, 3).translations,
            search_frequencies(spatial, M1Class::invertible, 3).translations);
}

}  // namespace
}  // namespace ffft
