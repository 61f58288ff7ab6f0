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

// Scalar figures of merit. All logarithms are base 2.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "esl/channel/channel_matrix.hpp"
#include "esl/psd/certify.hpp"

namespace esl {

/// Shannon entropy in bits, 0 log 0 = 0.
double entropy_bits(std::span<const double> p);

/// I(X:Y) = H(Y) - H(Y|X). Throws DomainError unless `input` is a probability
/// vector (within 1e-12) of length rows, and DimensionError on length mismatch.
double mutual_information(const ChannelMatrix& m, std::span<const double> input);

struct CapacityOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  /// Rows allowed to carry input probability; empty means all rows.
  std::vector<bool> support;
};

struct CapacityResult {
  double bits = 0.0;
  std::vector<double> distribution;
  std::size_t iterations = 0;
  bool converged = false;
  /// max_x D(W_x || q) - I, an upper bound on the distance to capacity.
  double gap = 0.0;
};

/// Blahut-Arimoto. Stops when successive mutual-information iterates differ
/// by less than tol; a run that hits max_iter comes back with converged =
/// false and its gap. Throws DomainError for non-stochastic input or an empty
/// support.
CapacityResult capacity(const ChannelMatrix& m, const CapacityOptions& opts = {});

/// Tr(m); throws DimensionError for non-square m.
double trace_fidelity(const ChannelMatrix& m);

struct DerivedBound {
  double value = 0.0;
  std::vector<std::string> derivation;
};

/// Largest trace of a square channel matrix realizable with a d-level system.
DerivedBound quantum_fidelity_bound(std::size_t d);

/// Trace bound for N_7 assisted by one PR box per use. The chain contains
/// cited steps that are recorded, not computed.
DerivedBound pr_fidelity_bound_n7();

enum class UnlockStatus { no_unlock, unlock, optimal_unlock };
const char* to_string(UnlockStatus s);

struct UnlockVerdict {
  int certified_rank = 0;
  std::size_t unassisted_dim = 0;
  std::size_t input_dim = 0;
  UnlockStatus status = UnlockStatus::no_unlock;
};

/// Uses the certificate's lower bound as the rank: unlock iff rank > d',
/// optimal iff additionally rank >= d_A.
UnlockVerdict assess_unlock(const RankCertificate& cert, std::size_t input_dim,
                            std::size_t unassisted_dim);

}  // namespace esl
