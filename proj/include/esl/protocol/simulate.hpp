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

#include "esl/channel/channel_matrix.hpp"
#include "esl/protocol/strategies.hpp"

namespace esl {

/// Channel matrix of an assisted strategy run on v, all probabilities in
/// closed form:
///   minimal     P_ij = sum_{l,k} q(j|l,k) Tr[(L_l (x) L_k) V rho_i V^dagger]
///   env_to_bob  P_ij = sum_k Tr[(L_{j|k} (x) L_k) V rho_i V^dagger]
///   bob_to_env  P_ij = sum_{l,k} q(j|l,k) Tr[(L_l (x) L_{k|l}) V rho_i V^dagger]
/// Throws DimensionError when POVM, kernel or encoding sizes disagree with v
/// or with each other.
ChannelMatrix simulate_assisted(const Isometry& v, const AssistedStrategy& s);

/// P_ij = sum_k Tr(rho_i E_k) q(j|k)
ChannelMatrix simulate_lone(const LoneStrategy& s);

/// sum_k w_k P_k. Throws DimensionError on shape mismatch and DomainError
/// unless w is a probability vector within 1e-12.
ChannelMatrix mix(std::span<const ChannelMatrix> matrices,
                  std::span<const double> weights);

}  // namespace esl
