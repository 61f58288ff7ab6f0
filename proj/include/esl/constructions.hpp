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

// The concrete subspaces and target channel matrices.
//
// Index conventions (frozen):
//   canonical_basis_7()[k], k = 0..6, in this order:
//     0: |02>   1: |10>   2: |12>   3: |20>   4: |21>
//     5: (|00> - |11>)/sqrt2
//     6: (|00> + |11>)/sqrt6 - sqrt(2/3)|22>
//   canonical_basis_general(d)[k]:
//     k = 0..d-2   entangled, (1/sqrt(k+2))|phi+_{k+1}> - sqrt((k+1)/(k+2))|k+1,k+1>
//     k = d-1..d^2-2   product |i>|j>, i != j, at k = product_index(i, j, d)
//   Kets |b e> are receiver (x) environment, flat index b*d + e.
//   Channel-matrix rows/cols are 0-based here; reports print them 1-based.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "esl/channel/channel_matrix.hpp"
#include "esl/tensor/complex_matrix.hpp"
#include "esl/tensor/linalg.hpp"

namespace esl {

/// Receiver and environment of N_7 are both qutrits.
inline constexpr BipartiteDims kN7Dims{3, 3};

std::vector<StateVector> canonical_basis_7();

/// Throws DomainError for d < 3.
std::vector<StateVector> canonical_basis_general(std::size_t d);

/// Index of |i>|j> (i != j) in canonical_basis_general(d), in [d-1, d^2-2].
/// Throws DomainError if i == j or either is out of range.
std::size_t product_index(std::size_t i, std::size_t j, std::size_t d);
/// Inverse of product_index.
std::pair<std::size_t, std::size_t> product_pair(std::size_t k, std::size_t d);

/// (1/sqrt d) sum_k |kk>
StateVector phi_plus(std::size_t d);
/// |i>|j> in C^d (x) C^d.
StateVector product_ket(std::size_t i, std::size_t j, std::size_t d);

/// I_5 (+) [[p, 1-p], [p/3, 1-p/3]]. Throws DomainError unless 0 <= p <= 1.
ChannelMatrix matrix_m7(double p);

/// The (d-1)x(d-1) lower-triangular block: row 0 = [1]; for 1-based i > 1,
/// 2/(i(i+1)) in column 1, 1/(i(i+1)) for 1 < j < i, i/(i+1) on the diagonal.
ChannelMatrix sigma_block(std::size_t d);

/// sigma_block(d) (+) I_{d(d-1)}. Throws DomainError for d < 3.
ChannelMatrix matrix_general(std::size_t d);

/// Block-diagonal direct sum.
ChannelMatrix direct_sum(const ChannelMatrix& a, const ChannelMatrix& b);

}  // namespace esl
