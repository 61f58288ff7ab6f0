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
#include <string>

#include "esl/psd/bounds.hpp"
#include "esl/psd/factorization.hpp"
#include "esl/psd/solver.hpp"

namespace esl {

enum class Verdict { equal, gap };
const char* to_string(Verdict v);

struct RankCertificate {
  int lower_bound = 0;
  BoundNode lower_method;
  int upper_bound = 0;
  PsdFactorization witness;
  /// max_ij |Tr(R_i C_j) - M_ij| of the witness.
  double witness_residual = 0.0;
  /// "hint", "classical" or "solver".
  std::string witness_source;
  /// Threshold the witness residual was accepted under.
  double witness_threshold = 0.0;
  Verdict verdict = Verdict::gap;
};

struct CertifyOptions {
  /// Include the diagonal witness built from repeated rows/columns. It is
  /// exact and always available, so with it the upper bound never exceeds
  /// the number of distinct rows.
  bool classical_witness = true;
  /// Max-abs residual under which an extracted witness is accepted.
  double witness_tol = 1e-10;
  /// Try the numerical solver at r = lower, lower+1, ... below the best
  /// extracted witness.
  bool solver_fallback = true;
  SolverOptions solver;
  LowerBoundOptions bounds;
};

/// Lower bound from lower_bound(); upper bound from the smallest witness that
/// validates: caller hints and the classical witness first, then the solver at
/// increasing r while it could still improve on them. If nothing else
/// validates the classical witness is used regardless of the option, so
/// upper_bound is always backed by a factorization. verdict is equal iff the
/// bounds meet.
RankCertificate certify(const ChannelMatrix& m,
                        std::span<const PsdFactorization> hints = {},
                        const CertifyOptions& opts = {});

}  // namespace esl
