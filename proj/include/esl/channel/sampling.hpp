// Copyright 2026 The ESL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded random quantum objects for property checks and sampled experiments.
// Everything draws from a caller-owned std::mt19937_64 so a single seed fixes
// a whole experiment.

#pragma once

#include <cstdint>
#include <random>

#include "esl/channel/quantum_channel.hpp"

namespace esl {

/// splitmix64 step; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Complex Gaussian matrix with E|z|^2 = 1.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

StateVector random_pure_state(std::size_t d, std::mt19937_64& rng);

/// G G^dagger / Tr for a d x rank Ginibre G (rank 0 means full rank).
DensityMatrix random_density(std::size_t d, std::mt19937_64& rng,
                             std::size_t rank = 0);

/// S^{-1/2} G_k S^{-1/2} with G_k = A_k A_k^dagger and S = sum_k G_k.
Povm random_povm(std::size_t d, std::size_t outcomes, std::mt19937_64& rng);

/// First d_A columns of a Haar unitary on receiver (x) environment.
Isometry random_isometry(std::size_t input_dim, BipartiteDims out,
                         std::mt19937_64& rng);

}  // namespace esl
