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

#include "esl/constructions.hpp"

#include <cmath>
#include <string>

#include "esl/error.hpp"

namespace esl {
namespace {

void require_d(std::size_t d, const char* what) {
  if (d < 3) {
    throw DomainError(std::string(what) + ": d must be >= 3, got " +
                      std::to_string(d));
  }
}

// Amplitude vector over C^d (x) C^d with a few nonzero |b e> entries.
struct Ket {
  explicit Ket(std::size_t d) : d(d), amp(d * d, 0.0) {}
  Ket& add(std::size_t b, std::size_t e, double a) {
    amp[b * d + e] += a;
    return *this;
  }
  StateVector done() { return StateVector(std::move(amp)); }
  std::size_t d;
  std::vector<cplx> amp;
};

}  // namespace

std::vector<StateVector> canonical_basis_7() {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  const double s23 = std::sqrt(2.0 / 3.0);
  std::vector<StateVector> basis;
  basis.reserve(7);
  basis.push_back(Ket(3).add(0, 2, 1.0).done());
  basis.push_back(Ket(3).add(1, 0, 1.0).done());
  basis.push_back(Ket(3).add(1, 2, 1.0).done());
  basis.push_back(Ket(3).add(2, 0, 1.0).done());
  basis.push_back(Ket(3).add(2, 1, 1.0).done());
  basis.push_back(Ket(3).add(0, 0, s2).add(1, 1, -s2).done());
  basis.push_back(Ket(3).add(0, 0, s6).add(1, 1, s6).add(2, 2, -s23).done());
  return basis;
}

std::vector<StateVector> canonical_basis_general(std::size_t d) {
  require_d(d, "canonical_basis_general");
  std::vector<StateVector> basis;
  basis.reserve(d * d - 1);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double kk = static_cast<double>(k);
    // (1/sqrt(k+2)) * (1/sqrt(k+1)) sum_{m<=k} |mm>
    const double spread = 1.0 / std::sqrt((kk + 1.0) * (kk + 2.0));
    Ket ket(d);
    for (std::size_t m = 0; m <= k; ++m) ket.add(m, m, spread);
    ket.add(k + 1, k + 1, -std::sqrt((kk + 1.0) / (kk + 2.0)));
    basis.push_back(ket.done());
  }
  for (std::size_t k = d - 1; k + 1 < d * d; ++k) {
    const auto [i, j] = product_pair(k, d);
    basis.push_back(product_ket(i, j, d));
  }
  return basis;
}

std::size_t product_index(std::size_t i, std::size_t j, std::size_t d) {
  if (i >= d || j >= d) throw DomainError("product_index: index out of range");
  if (i == j) throw DomainError("product_index: i == j has no product slot");
  return i > j ? i * (d - 1) + j + (d - 1) : i * (d - 1) + (j - 1) + (d - 1);
}

std::pair<std::size_t, std::size_t> product_pair(std::size_t k, std::size_t d) {
  if (k < d - 1 || k + 1 >= d * d) {
    throw DomainError("product_pair: index " + std::to_string(k) +
                      " is not a product slot");
  }
  // Row i holds d-1 slots; within it, columns skip j == i.
  const std::size_t off = k - (d - 1);
  const std::size_t i = off / (d - 1);
  const std::size_t r = off % (d - 1);
  return {i, r < i ? r : r + 1};
}

StateVector phi_plus(std::size_t d) {
  if (d == 0) throw DomainError("phi_plus: d must be >= 1");
  Ket ket(d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t k = 0; k < d; ++k) ket.add(k, k, a);
  return ket.done();
}

StateVector product_ket(std::size_t i, std::size_t j, std::size_t d) {
  if (i >= d || j >= d) throw DomainError("product_ket: index out of range");
  return Ket(d).add(i, j, 1.0).done();
}

ChannelMatrix matrix_m7(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("matrix_m7: p must lie in [0,1], got " + std::to_string(p));
  }
  ChannelMatrix m(7, 7);
  for (std::size_t i = 0; i < 5; ++i) m(i, i) = 1.0;
  m(5, 5) = p;
  m(5, 6) = 1.0 - p;
  m(6, 5) = p / 3.0;
  m(6, 6) = 1.0 - p / 3.0;
  return m;
}

ChannelMatrix sigma_block(std::size_t d) {
  require_d(d, "sigma_block");
  const std::size_t n = d - 1;
  ChannelMatrix m(n, n);
  m(0, 0) = 1.0;
  for (std::size_t r = 1; r < n; ++r) {
    const double i = static_cast<double>(r + 1);
    m(r, 0) = 2.0 / (i * (i + 1.0));
    for (std::size_t c = 1; c < r; ++c) m(r, c) = 1.0 / (i * (i + 1.0));
    m(r, r) = i / (i + 1.0);
  }
  return m;
}

ChannelMatrix matrix_general(std::size_t d) {
  require_d(d, "matrix_general");
  return direct_sum(sigma_block(d), ChannelMatrix::identity(d * (d - 1)));
}

ChannelMatrix direct_sum(const ChannelMatrix& a, const ChannelMatrix& b) {
  ChannelMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return m;
}

}  // namespace esl
