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

// Combinatorial and monotone lower bounds on PSD rank.
//
// The engine works on sub-rectangles (row set x column set) of the input and
// combines three facts:
//   * Positive row (or column) rescaling preserves PSD rank, so a nonzero
//     block can be normalized to row-stochastic and bounded by the sum of its
//     column maxima; the same on the transpose.
//   * If rows S and columns T carry an all-zero block, the row factors of S
//     and the column factors of T have orthogonal supports, so
//     rank >= rank(S x T^c) + rank(S^c x T). Direct sums, block-triangular
//     shapes and triangular matrices with positive diagonal are special cases.
//   * Any nonzero matrix has rank >= 1.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esl/channel/channel_matrix.hpp"

namespace esl {

/// Sum over columns of the column maximum. No stochasticity check.
double column_maxima_sum(const ChannelMatrix& m);

/// Max-monotone of a row-stochastic matrix: sum_j max_i m_ij. The printed
/// row-maxima orientation is not sound ([[0,1],[0,1]] would get 2) and is not
/// offered. Throws DomainError for non-stochastic input.
double max_monotone(const ChannelMatrix& m);

/// ceil(x - 1e-9)
int monotone_to_bound(double x);

/// One step of the lower-bound derivation. Row and column indices always
/// refer to the matrix handed to lower_bound (or to its transpose when
/// `transposed` is set on the root).
struct BoundNode {
  std::string method;  // zero | nonzero | rank-one | monotone |
                       // monotone-transpose | triangular | direct-sum |
                       // block-triangular | transpose
  int bound = 0;
  std::optional<double> value;  // monotone value when method is a monotone
  bool transposed = false;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<BoundNode> children;
};

struct LowerBoundOptions {
  /// Zero-block search over row (or column) subsets runs when the smaller
  /// side of a block has at most this many lines.
  std::size_t subset_search_limit = 10;
  /// Entries with |m_ij| <= zero_tol count as structural zeros. The default
  /// only trusts exact zeros; anything larger trades soundness for reach.
  double zero_tol = 0.0;
};

struct LowerBound {
  int bound = 0;
  BoundNode trace;
};

/// Best bound over all methods, computed on m and on m^T; the larger wins
/// (ties keep m). Throws DomainError for entries below -1e-12.
LowerBound lower_bound(const ChannelMatrix& m, const LowerBoundOptions& opts = {});

}  // namespace esl
