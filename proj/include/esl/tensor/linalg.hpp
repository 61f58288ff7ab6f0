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

#include <cstdint>
#include <utility>
#include <vector>

#include "esl/tensor/complex_matrix.hpp"

namespace esl {

inline constexpr double kDefaultPsdTol = 1e-9;

/// Which factor of a bipartite receiver (x) environment space to keep.
enum class Subsystem { receiver, environment };

/// Bipartite dimensions. Joint basis |b>|e> sits at flat index b*env + e.
struct BipartiteDims {
  std::size_t receiver;
  std::size_t environment;
  std::size_t total() const { return receiver * environment; }
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on `keep`. Throws DimensionError unless m is square of
/// size dims.total().
ComplexMatrix partial_trace(const ComplexMatrix& m, BipartiteDims dims,
                            Subsystem keep);

/// max_ij |m_ij - conj(m_ji)|; m must be square.
double hermiticity_defect(const ComplexMatrix& m);

/// Ascending eigenvalues of the Hermitian part (m + m^dagger)/2.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Eigen-decomposition of the Hermitian part: ascending eigenvalues and the
/// matching orthonormal eigenvectors as columns.
std::pair<std::vector<double>, ComplexMatrix> hermitian_eigensystem(
    const ComplexMatrix& m);

/// True iff m is Hermitian within herm_tol and every eigenvalue is >= -eig_tol.
/// Throws DimensionError for non-square input.
bool is_psd(const ComplexMatrix& m, double herm_tol = kDefaultPsdTol,
            double eig_tol = kDefaultPsdTol);

/// Haar-distributed unitary: QR of a seeded complex Gaussian matrix with the
/// phases of R's diagonal absorbed into Q. Deterministic in (d, seed).
ComplexMatrix haar_random_unitary(std::size_t d, std::uint64_t seed);

/// max_ij |(U^dagger U - I)_ij|
double unitarity_defect(const ComplexMatrix& u);

/// Hermitian inverse square root; every eigenvalue must exceed `floor`.
ComplexMatrix inverse_sqrt_psd(const ComplexMatrix& m, double floor = 1e-14);

}  // namespace esl
