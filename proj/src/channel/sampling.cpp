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

#include "esl/channel/sampling.hpp"

#include <cmath>

#include "esl/error.hpp"

namespace esl {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
  ComplexMatrix g(rows, cols);
  for (cplx& z : g.entries()) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = cplx(re, im);
  }
  return g;
}

StateVector random_pure_state(std::size_t d, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(d, 1, rng);
  return StateVector::normalized({g.entries().begin(), g.entries().end()});
}

DensityMatrix random_density(std::size_t d, std::mt19937_64& rng,
                             std::size_t rank) {
  if (d == 0) throw DomainError("random_density: d must be >= 1");
  const ComplexMatrix g = ginibre(d, rank == 0 ? d : rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Exact Hermitian symmetrization so round-off cannot trip the PSD check.
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(std::move(rho));
}

Povm random_povm(std::size_t d, std::size_t outcomes, std::mt19937_64& rng) {
  if (outcomes == 0) throw DomainError("random_povm: need at least one outcome");
  std::vector<ComplexMatrix> g;
  g.reserve(outcomes);
  ComplexMatrix s(d, d);
  for (std::size_t k = 0; k < outcomes; ++k) {
    const ComplexMatrix a = ginibre(d, d, rng);
    g.push_back(a * a.adjoint());
    s += g.back();
  }
  const ComplexMatrix w = inverse_sqrt_psd(s);
  std::vector<ComplexMatrix> effects;
  effects.reserve(outcomes);
  for (const ComplexMatrix& gk : g) {
    ComplexMatrix e = w * gk * w;
    effects.push_back(0.5 * (e + e.adjoint()));
  }
  return Povm(std::move(effects));
}

Isometry random_isometry(std::size_t input_dim, BipartiteDims out,
                         std::mt19937_64& rng) {
  const std::size_t n = out.total();
  if (input_dim == 0 || input_dim > n) {
    throw DimensionError("random_isometry: input dim must be in [1, d_B*d_E]");
  }
  const ComplexMatrix u = haar_random_unitary(n, rng());
  return Isometry(u.block(0, 0, n, input_dim), out);
}

}  // namespace esl
