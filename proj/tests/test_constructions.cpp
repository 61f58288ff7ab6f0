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

#include <gtest/gtest.h>

#include <cmath>

#include "esl/constructions.hpp"
#include "esl/error.hpp"

namespace esl {
namespace {

ComplexMatrix span_projector(const std::vector<StateVector>& vs) {
  ComplexMatrix p(vs.front().dim(), vs.front().dim());
  for (const auto& v : vs) p += v.projector();
  return p;
}

double max_gram_defect(const std::vector<StateVector>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      worst = std::max(worst, std::abs(inner(b[i], b[j]) - cplx(i == j ? 1.0 : 0.0)));
  return worst;
}

TEST(Basis7, ListedVectorsInOrder) {
  const auto b = canonical_basis_7();
  ASSERT_EQ(b.size(), 7u);
  const std::size_t products[5][2] = {{0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_LT(std::abs(inner(b[k], product_ket(products[k][0], products[k][1], 3)) - 1.0),
              1e-15);
  }
  const double r2 = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(b[5][0].real(), r2, 1e-15);
  EXPECT_NEAR(b[5][4].real(), -r2, 1e-15);
  for (std::size_t i : {1u, 2u, 3u, 5u, 6u, 7u, 8u}) EXPECT_EQ(b[5][i], cplx(0.0));
  EXPECT_NEAR(b[6][0].real(), 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(b[6][4].real(), 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(b[6][8].real(), -std::sqrt(2.0 / 3.0), 1e-15);
}

TEST(Basis7, OrthonormalAndAvoidsPhiPlusAnd01) {
  const auto b = canonical_basis_7();
  EXPECT_LT(max_gram_defect(b), 1e-12);
  for (const auto& v : b) {
    EXPECT_LT(std::abs(inner(phi_plus(3), v)), 1e-12);
    EXPECT_LT(std::abs(inner(product_ket(0, 1, 3), v)), 1e-12);
  }
}

TEST(Basis7, SpanEqualsGeneralBasisWithout01) {
  auto g = canonical_basis_general(3);
  g.erase(g.begin() + static_cast<std::ptrdiff_t>(product_index(0, 1, 3)));
  EXPECT_LT(max_abs_diff(span_projector(canonical_basis_7()), span_projector(g)), 1e-12);
}

TEST(BasisGeneral, Properties) {
  for (std::size_t d = 3; d <= 6; ++d) {
    const auto b = canonical_basis_general(d);
    ASSERT_EQ(b.size(), d * d - 1);
    EXPECT_LT(max_gram_defect(b), 1e-12) << d;
    for (const auto& v : b) EXPECT_LT(std::abs(inner(phi_plus(d), v)), 1e-12);
    // Complement of phi+ in C^d (x) C^d.
    ComplexMatrix p = span_projector(b) + phi_plus(d).projector();
    EXPECT_LT(max_abs_diff(p, ComplexMatrix::identity(d * d)), 1e-12);
  }
  EXPECT_THROW(canonical_basis_general(2), DomainError);
}

TEST(BasisGeneral, WorkedEntries) {
  const auto b = canonical_basis_general(3);
  const double r2 = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(b[0][0].real(), r2, 1e-15);
  EXPECT_NEAR(b[0][4].real(), -r2, 1e-15);
  EXPECT_NEAR(std::abs(inner(b[4], product_ket(1, 0, 3))), 1.0, 1e-15);
  // Entangled vectors: 1/sqrt((k+1)(k+2)) on |mm>, m <= k.
  const auto b5 = canonical_basis_general(5);
  for (std::size_t k = 0; k + 1 < 5; ++k) {
    const double a = 1.0 / std::sqrt((k + 1.0) * (k + 2.0));
    for (std::size_t m = 0; m <= k; ++m) EXPECT_NEAR(b5[k][m * 5 + m].real(), a, 1e-15);
    EXPECT_NEAR(b5[k][(k + 1) * 6].real(), -std::sqrt((k + 1.0) / (k + 2.0)), 1e-15);
  }
}

TEST(ProductIndex, WorkedValuesAndBijection) {
  EXPECT_EQ(product_index(2, 1, 3), 7u);
  EXPECT_EQ(product_index(0, 1, 3), 2u);
  EXPECT_EQ(product_index(1, 0, 3), 4u);
  EXPECT_THROW(product_index(1, 1, 3), DomainError);
  for (std::size_t d = 3; d <= 6; ++d) {
    std::vector<int> seen(d * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        if (i == j) continue;
        const std::size_t k = product_index(i, j, d);
        ASSERT_GE(k, d - 1);
        ASSERT_LT(k, d * d - 1);
        ++seen[k];
        EXPECT_EQ(product_pair(k, d), std::make_pair(i, j));
      }
    for (std::size_t k = d - 1; k < d * d - 1; ++k) EXPECT_EQ(seen[k], 1);
  }
}

TEST(MatrixM7, ClosedForm) {
  for (double p : {0.0, 0.3, 1.0}) {
    const ChannelMatrix m = matrix_m7(p);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(m(i, j), i == j ? 1.0 : 0.0);
    EXPECT_EQ(m(5, 5), p);
    EXPECT_EQ(m(5, 6), 1.0 - p);
    EXPECT_EQ(m(6, 5), p / 3.0);
    EXPECT_EQ(m(6, 6), 1.0 - p / 3.0);
    for (std::size_t i = 0; i < 7; ++i) {
      double s = 0.0;
      for (double x : m.row(i)) s += x;
      EXPECT_EQ(s, 1.0);
    }
  }
  EXPECT_NEAR(matrix_m7(1.0)(6, 5), 1.0 / 3.0, 1e-16);
  EXPECT_EQ(matrix_m7(0.0)(5, 6), 1.0);
  EXPECT_EQ(matrix_m7(0.0)(6, 6), 1.0);
  EXPECT_THROW(matrix_m7(-0.1), DomainError);
  EXPECT_THROW(matrix_m7(1.1), DomainError);
  EXPECT_THROW(matrix_m7(NAN), DomainError);
}

TEST(MatrixGeneral, SigmaBlock) {
  const ChannelMatrix s3 = sigma_block(3);
  EXPECT_EQ(s3, (ChannelMatrix{{1.0, 0.0}, {1.0 / 3.0, 2.0 / 3.0}}));
  const ChannelMatrix s5 = sigma_block(5);
  EXPECT_NEAR(s5(3, 0), 0.1, 1e-16);
  EXPECT_NEAR(s5(3, 1), 0.05, 1e-16);
  EXPECT_NEAR(s5(3, 2), 0.05, 1e-16);
  EXPECT_NEAR(s5(3, 3), 0.8, 1e-16);
}

TEST(MatrixGeneral, StructureAndRowSums) {
  for (std::size_t d = 3; d <= 8; ++d) {
    const ChannelMatrix m = matrix_general(d);
    ASSERT_EQ(m.rows(), d * d - 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      double s = 0.0;
      for (double x : m.row(i)) s += x;
      EXPECT_NEAR(s, 1.0, 1e-15) << "d=" << d << " row " << i;
    }
    for (std::size_t i = 0; i + 1 < d; ++i) {
      EXPECT_GT(m(i, i), 0.0);
      for (std::size_t j = i + 1; j < m.cols(); ++j) EXPECT_EQ(m(i, j), 0.0);
    }
    for (std::size_t i = d - 1; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j), i == j ? 1.0 : 0.0);
  }
  EXPECT_THROW(matrix_general(2), DomainError);
}

TEST(DirectSum, Blocks) {
  const ChannelMatrix a{{1.0}};
  const ChannelMatrix b{{0.5, 0.5}};
  const ChannelMatrix s = direct_sum(a, b);
  EXPECT_EQ(s, (ChannelMatrix{{1.0, 0.0, 0.0}, {0.0, 0.5, 0.5}}));
}

}  // namespace
}  // namespace esl
