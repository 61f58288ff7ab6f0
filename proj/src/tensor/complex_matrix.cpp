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

#include "esl/tensor/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "esl/error.hpp"
#include "esl/tensor/kernels.hpp"

namespace esl {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double norm2(std::span<const cplx> v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: expected " +
                         std::to_string(rows_ * cols_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
    throw DomainError("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ComplexMatrix: ragged rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
    throw DomainError("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace: matrix is not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0,
                                   std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionError("block: range exceeds matrix");
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0),
                nc, out.entries_.begin() + static_cast<std::ptrdiff_t>(i * nc));
  }
  return out;
}

std::vector<cplx> ComplexMatrix::column(std::size_t j) const {
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  kernels::active_kernels().axpy(1.0, other.data(), data(), entries_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  kernels::active_kernels().axpy(-1.0, other.data(), data(), entries_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  kernels::active_kernels().scale(s, data(), data(), entries_.size());
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) {
  a *= s;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: inner dimensions " +
                         std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  kernels::active_kernels().gemm(a.data(), b.data(), c.data(), a.rows(),
                                 a.cols(), b.cols());
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

double frobenius_norm(const ComplexMatrix& a) { return norm2(a.entries()); }

cplx inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "inner");
  return kernels::active_kernels().dot_conj(a.data(), b.data(),
                                            a.entries().size());
}

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_of_product: incompatible shapes");
  }
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  }
  return t;
}

StateVector::StateVector(std::vector<cplx> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  const double n = norm2(amplitudes_);
  if (!(std::abs(n - 1.0) <= 1e-12)) {
    throw DomainError("StateVector: norm " + std::to_string(n) + " is not 1");
  }
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw DimensionError("StateVector::basis: index out of range");
  std::vector<cplx> v(dim, 0.0);
  v[k] = 1.0;
  return StateVector(std::move(v));
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes) {
  const double n = norm2(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("StateVector::normalized: zero or non-finite vector");
  }
  for (cplx& z : amplitudes) z /= n;
  return StateVector(std::move(amplitudes));
}

ComplexMatrix StateVector::projector() const {
  const std::size_t d = dim();
  ComplexMatrix p(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      p(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    }
  }
  return p;
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("inner: state dimensions differ");
  return kernels::active_kernels().dot_conj(a.amplitudes().data(),
                                            b.amplitudes().data(), a.dim());
}

StateVector apply(const ComplexMatrix& m, const StateVector& v) {
  if (m.cols() != v.dim()) throw DimensionError("apply: dimension mismatch");
  std::vector<cplx> out(m.rows());
  kernels::active_kernels().gemm(m.data(), v.amplitudes().data(), out.data(),
                                 m.rows(), m.cols(), 1);
  return StateVector(std::move(out));
}

}  // namespace esl
