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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace esl {

inline constexpr double kStochasticTol = 1e-12;

/// Real n x m matrix of conditional probabilities p(y_j | x_i), row-major.
/// Construction only enforces shape and finiteness so that intermediate or
/// deliberately broken matrices can be represented; stochasticity is checked
/// by the operations that need it.
class ChannelMatrix {
 public:
  ChannelMatrix() = default;
  ChannelMatrix(std::size_t rows, std::size_t cols);
  ChannelMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  ChannelMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static ChannelMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const double> entries() const { return entries_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }

  ChannelMatrix transpose() const;
  double trace() const;

  friend bool operator==(const ChannelMatrix&, const ChannelMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

double max_abs_diff(const ChannelMatrix& a, const ChannelMatrix& b);

/// max_i |sum_j m_ij - 1|
double row_sum_defect(const ChannelMatrix& m);
double min_entry(const ChannelMatrix& m);

/// Entries >= -tol and every row sums to 1 within tol.
bool is_row_stochastic(const ChannelMatrix& m, double tol = kStochasticTol);

/// Throws DomainError naming the offending row or entry.
void require_row_stochastic(const ChannelMatrix& m, const char* what,
                            double tol = kStochasticTol);
void require_nonnegative(const ChannelMatrix& m, const char* what,
                         double tol = kStochasticTol);

/// Sets entries in (-tol, 0) to exactly 0; throws DomainError for anything
/// more negative.
void clamp_roundoff(ChannelMatrix& m, double tol = kStochasticTol);

/// Drops the rows not listed in `keep` (order preserved as given).
ChannelMatrix select_rows(const ChannelMatrix& m,
                          std::span<const std::size_t> keep);

}  // namespace esl
