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

#pragma once

#include <span>
#include <vector>

#include "esl/channel/channel_matrix.hpp"
#include "esl/channel/quantum_channel.hpp"
#include "esl/protocol/strategies.hpp"

namespace esl {

/// M_ij = Tr(R_i C_j) with r x r PSD factors. Not validated on construction so
/// that broken candidates can be inspected; validate_factorization checks.
struct PsdFactorization {
  std::size_t size = 0;
  std::vector<ComplexMatrix> row_factors;
  std::vector<ComplexMatrix> col_factors;
};

/// Re Tr(R_i C_j) for all i, j. Throws DimensionError on inconsistent sizes.
ChannelMatrix realized_matrix(const PsdFactorization& f);

/// Smallest eigenvalue over all factors (+inf for an empty factorization).
double min_factor_eigenvalue(const PsdFactorization& f);

/// max_ij |Tr(R_i C_j) - M_ij|. Throws DimensionError on shape mismatch and
/// DomainError if a factor is not PSD within `psd_tol`.
double validate_factorization(const ChannelMatrix& m, const PsdFactorization& f,
                              double psd_tol = kDefaultPsdTol);

/// R_i = rho_i, C_j = sum_k q(j|k) E_k. relabel is outcomes x outputs.
PsdFactorization factorization_from_strategy(std::span<const DensityMatrix> encodings,
                                             const Povm& povm,
                                             const ChannelMatrix& relabel);
PsdFactorization factorization_from_strategy(const LoneStrategy& s);

/// Unassisted use of a channel: R_i = N(rho_i) on the receiver, C_j = M_j.
/// Size d_B.
PsdFactorization factorization_from_channel(const Isometry& v,
                                            std::span<const DensityMatrix> encodings,
                                            const Povm& receiver_povm);

/// Diagonal witness. Either identical rows share a basis state
/// (R_i = |c(i)><c(i)|, C_j = sum_c M_{c,j}|c><c|) or identical columns do;
/// whichever needs fewer distinct lines. Exact for every nonnegative matrix.
PsdFactorization classical_witness(const ChannelMatrix& m);

}  // namespace esl
