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

#include "esl/channel/channel_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "esl/error.hpp"

namespace esl {
namespace {

void require_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw DomainError("ChannelMatrix: non-finite entry");
  }
}

std::string cell(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

ChannelMatrix::ChannelMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

ChannelMatrix::ChannelMatrix(std::size_t rows, std::size_t cols,
                             std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ChannelMatrix: expected " +
                         std::to_string(rows_ * cols_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  require_finite(entries_);
}

ChannelMatrix::ChannelMatrix(
    std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ChannelMatrix: ragged rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  require_finite(entries_);
}

ChannelMatrix ChannelMatrix::identity(std::size_t n) {
  ChannelMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ChannelMatrix ChannelMatrix::transpose() const {
  ChannelMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double ChannelMatrix::trace() const {
  if (!is_square()) {
    throw DimensionError("trace: channel matrix is " + std::to_string(rows_) +
                         "x" + std::to_string(cols_));
  }
  double t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double max_abs_diff(const ChannelMatrix& a, const ChannelMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: channel matrix shapes differ");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

double row_sum_defect(const ChannelMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    worst = std::max(worst, std::abs(std::accumulate(r.begin(), r.end(), 0.0) - 1.0));
  }
  return worst;
}

double min_entry(const ChannelMatrix& m) {
  if (m.entries().empty()) return std::numeric_limits<double>::infinity();
  return *std::min_element(m.entries().begin(), m.entries().end());
}

bool is_row_stochastic(const ChannelMatrix& m, double tol) {
  return m.rows() > 0 && min_entry(m) >= -tol && row_sum_defect(m) <= tol;
}

void require_nonnegative(const ChannelMatrix& m, const char* what, double tol) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) < -tol) {
        throw DomainError(std::string(what) + ": negative entry at " + cell(i, j));
      }
    }
  }
}

void require_row_stochastic(const ChannelMatrix& m, const char* what,
                            double tol) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw DomainError(std::string(what) + ": empty channel matrix");
  }
  require_nonnegative(m, what, tol);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto r = m.row(i);
    const double s = std::accumulate(r.begin(), r.end(), 0.0);
    if (std::abs(s - 1.0) > tol) {
      throw DomainError(std::string(what) + ": row " + std::to_string(i) +
                        " sums to " + std::to_string(s));
    }
  }
}

void clamp_roundoff(ChannelMatrix& m, double tol) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double& x = m(i, j);
      if (x < -tol) {
        throw DomainError("negative probability " + std::to_string(x) + " at " +
                          cell(i, j));
      }
      if (x < 0.0) x = 0.0;
    }
  }
}

ChannelMatrix select_rows(const ChannelMatrix& m,
                          std::span<const std::size_t> keep) {
  ChannelMatrix out(keep.size(), m.cols());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    if (keep[r] >= m.rows()) throw DimensionError("select_rows: index out of range");
    for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(keep[r], j);
  }
  return out;
}

}  // namespace esl
