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

#ifndef FFFT_SPECTRUM_SEARCH_HPP
#define FFFT_SPECTRUM_SEARCH_HPP

// Search for integer frequency translations c_0 = 0, c_1, ..., c_{K-1} that
// make the seed matrix M_1 = (e^{-2 pi i c_j . A b_k}) invertible or Hadamard.
//
// Each x in Z^d gives a character x -> e^{-2 pi i x . A b_j} that only depends
// on x modulo B Z^d, B = (A^T)^-1. Invertible choices are read off the
// character matrix over one representative per coset; Hadamard choices are
// searched for over a bounded integer box.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffft/exact.hpp"
#include "ffft/fractal_transform.hpp"
#include "ffft/ifs_core.hpp"
#include "ffft/phasor.hpp"

namespace ffft {

inline constexpr std::size_t kMaxCosets = 10000;

struct CosetSystem {
  IntMatrix b_matrix;
  // One integer vector per coset of Z^d / B Z^d.
  std::vector<IntVector> representatives;
};

// x ~ y iff B^-1 (x - y) is integral.
bool congruent(const IntMatrix& b_matrix, const IntVector& x, const IntVector& y);

// Scans the box [0, |det B|)^d, first coordinate fastest, keeping the first
// vector of each coset.
CosetSystem coset_representatives(const IntMatrix& b_matrix, std::size_t max_cosets = kMaxCosets);

// Row per coset representative x, column per branch j: e^{-2 pi i x . A b_j}.
ComplexMatrix character_matrix(const SpatialIfs& spatial, const CosetSystem& cosets);

struct SearchResult {
  // Present on success; c[0] is always the zero vector.
  std::optional<std::vector<IntVector>> translations;
  // A b_j - A b_k is non-integral for every pair j != k.
  bool hypothesis_holds = false;
  std::vector<std::string> warnings;
  // Pairs (i, j) of returned translations that are congruent mod B Z^d.
  std::vector<std::pair<std::size_t, std::size_t>> coset_equivalences;
  std::string failure;
};

SearchResult search_frequencies(const SpatialIfs& spatial, M1Class target, long search_bound,
                                std::size_t max_cosets = kMaxCosets);

}  // namespace ffft

#endif  // FFFT_SPECTRUM_SEARCH_HPP
