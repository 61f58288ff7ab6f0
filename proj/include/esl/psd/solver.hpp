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

// Numerical search for a size-r PSD factorization.
//
// Factors are parametrized as R_i = A_i^dagger A_i and C_j = B_j^dagger B_j
// with square complex A_i, B_j, so every iterate is PSD by construction. The
// residuals f_ij = Tr(R_i C_j) - M_ij = ||A_i B_j^dagger||_F^2 - M_ij are driven
// to zero with Levenberg-Marquardt steps in the dual (residual-space) form:
// the normal matrix is (nm) x (nm) regardless of r.

#pragma once

#include <cstdint>
#include <vector>

#include "esl/channel/channel_matrix.hpp"
#include "esl/psd/factorization.hpp"

namespace esl {

struct SolverOptions {
  std::uint64_t seed = 1;
  std::size_t restarts = 50;
  std::size_t max_iters = 3000;
  /// Relative Frobenius residual counted as success.
  double success_threshold = 1e-6;
  /// A restart stops early once its relative residual falls below this.
  double converge_tol = 1e-13;
  /// Run restarts on worker threads. Results do not depend on this flag.
  bool parallel = false;
};

struct SolverResult {
  PsdFactorization factorization;
  /// ||Tr(R_i C_j) - M||_F / ||M||_F of the best restart.
  double residual = 0.0;
  /// max_ij |Tr(R_i C_j) - M_ij| of the best restart.
  double max_abs_residual = 0.0;
  std::size_t best_restart = 0;
  bool success = false;
  std::vector<double> restart_residuals;
};

/// Deterministic in (m, r, seed, restarts, max_iters, converge_tol). Restart s
/// draws from mix_seed(seed + s); the best restart is the lowest residual with
/// ties going to the lowest index. Throws DomainError for r == 0.
SolverResult solve_factorization(const ChannelMatrix& m, std::size_t r,
                                 const SolverOptions& opts = {});

}  // namespace esl
