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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace esl {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Sized for the small operators that show
/// up here (tens of rows); there is no sparse path.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError if entries.size() != rows*cols and DomainError on
  /// non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  cplx& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const cplx> entries() const { return entries_; }
  std::span<cplx> entries() { return entries_; }
  const cplx* data() const { return entries_.data(); }
  cplx* data() { return entries_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;

  /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;
  /// Column j as a vector.
  std::vector<cplx> column(std::size_t j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
/// Matrix product.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);

/// Tr(A^dagger B) = sum conj(a_ij) b_ij. Equals Tr(AB) when A is Hermitian.
cplx inner(const ComplexMatrix& a, const ComplexMatrix& b);
/// Tr(AB) for arbitrary square-compatible operands.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Unit vector in C^dim.
class StateVector {
 public:
  /// Throws DomainError unless the Euclidean norm is 1 within 1e-12.
  explicit StateVector(std::vector<cplx> amplitudes);

  static StateVector basis(std::size_t dim, std::size_t k);
  /// Normalizes first; throws DomainError for the zero vector.
  static StateVector normalized(std::vector<cplx> amplitudes);

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }

  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  std::vector<cplx> amplitudes_;
};

/// <a|b>
cplx inner(const StateVector& a, const StateVector& b);
StateVector apply(const ComplexMatrix& m, const StateVector& v);

}  // namespace esl
