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

#include "esl/channel/quantum_channel.hpp"

#include <cmath>
#include <string>

#include "esl/error.hpp"

namespace esl {

Isometry::Isometry(ComplexMatrix v, BipartiteDims out)
    : v_(std::move(v)), out_(out) {
  if (v_.rows() != out_.total() || v_.cols() == 0) {
    throw DimensionError("Isometry: matrix is " + std::to_string(v_.rows()) +
                         "x" + std::to_string(v_.cols()) +
                         ", output dims give " + std::to_string(out_.total()));
  }
  const double defect = unitarity_defect(v_);
  if (!(defect <= kIsometryTol)) {
    throw DomainError("Isometry: V^dagger V deviates from I by " +
                      std::to_string(defect));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (!rho_.is_square() || rho_.rows() == 0) {
    throw DimensionError("DensityMatrix: operator must be square and non-empty");
  }
  if (!is_psd(rho_)) throw DomainError("DensityMatrix: operator is not PSD");
  const cplx t = rho_.trace();
  if (std::abs(t - 1.0) > kTraceTol) {
    throw DomainError("DensityMatrix: trace " + std::to_string(t.real()) +
                      " is not 1");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::basis(std::size_t d, std::size_t k) {
  return pure(StateVector::basis(d, k));
}

Povm::Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) throw DomainError("Povm: no effects");
  const std::size_t d = effects_.front().rows();
  ComplexMatrix sum(d, d);
  for (std::size_t k = 0; k < effects_.size(); ++k) {
    const ComplexMatrix& e = effects_[k];
    if (!e.is_square() || e.rows() != d) {
      throw DimensionError("Povm: effect " + std::to_string(k) +
                           " has the wrong shape");
    }
    if (!is_psd(e)) {
      throw DomainError("Povm: effect " + std::to_string(k) + " is not PSD");
    }
    sum += e;
  }
  const double defect = max_abs_diff(sum, ComplexMatrix::identity(d));
  if (defect > kDefaultPsdTol) {
    throw DomainError("Povm: effects sum to I only within " +
                      std::to_string(defect));
  }
}

Povm Povm::computational(std::size_t d) {
  std::vector<ComplexMatrix> effects;
  effects.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    effects.push_back(StateVector::basis(d, k).projector());
  }
  return Povm(std::move(effects));
}

Povm Povm::trivial(std::size_t d) { return Povm({ComplexMatrix::identity(d)}); }

double born_probability(const ComplexMatrix& effect, const ComplexMatrix& rho) {
  // inner() conjugates its first argument; for Hermitian E that is Tr(E rho).
  return inner(effect, rho).real();
}

ComplexMatrix joint_output(const Isometry& v, const DensityMatrix& rho) {
  if (rho.dim() != v.input_dim()) {
    throw DimensionError("channel input has dim " + std::to_string(rho.dim()) +
                         ", isometry expects " + std::to_string(v.input_dim()));
  }
  return v.matrix() * rho.matrix() * v.matrix().adjoint();
}

DensityMatrix channel_apply(const Isometry& v, const DensityMatrix& rho) {
  return DensityMatrix(
      partial_trace(joint_output(v, rho), v.output_dims(), Subsystem::receiver));
}

DensityMatrix complementary_apply(const Isometry& v, const DensityMatrix& rho) {
  return DensityMatrix(partial_trace(joint_output(v, rho), v.output_dims(),
                                     Subsystem::environment));
}

Isometry isometry_from_subspace_basis(std::span<const StateVector> basis,
                                      BipartiteDims out,
                                      const std::optional<ComplexMatrix>& rotation) {
  if (basis.empty()) throw DimensionError("isometry_from_subspace_basis: empty basis");
  const std::size_t n = out.total();
  const std::size_t k = basis.size();
  ComplexMatrix v(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    if (basis[c].dim() != n) {
      throw DimensionError("isometry_from_subspace_basis: vector " +
                           std::to_string(c) + " has dim " +
                           std::to_string(basis[c].dim()));
    }
    for (std::size_t r = 0; r < n; ++r) v(r, c) = basis[c][r];
  }
  const double gram_defect = unitarity_defect(v);
  if (gram_defect > 1e-10) {
    throw DomainError("isometry_from_subspace_basis: basis is not orthonormal (" +
                      std::to_string(gram_defect) + ")");
  }
  if (rotation) {
    if (!rotation->is_square() || rotation->rows() != k) {
      throw DimensionError("isometry_from_subspace_basis: rotation must be " +
                           std::to_string(k) + "x" + std::to_string(k));
    }
    if (unitarity_defect(*rotation) > kIsometryTol) {
      throw DomainError("isometry_from_subspace_basis: rotation is not unitary");
    }
    v = v * *rotation;
  }
  return Isometry(std::move(v), out);
}

ChannelMatrix unassisted_channel_matrix(const Isometry& v,
                                        std::span<const DensityMatrix> encodings,
                                        const Povm& receiver_povm) {
  if (receiver_povm.dim() != v.receiver_dim()) {
    throw DimensionError("receiver POVM has dim " +
                         std::to_string(receiver_povm.dim()) + ", receiver is " +
                         std::to_string(v.receiver_dim()));
  }
  ChannelMatrix p(encodings.size(), receiver_povm.outcomes());
  for (std::size_t i = 0; i < encodings.size(); ++i) {
    const DensityMatrix out = channel_apply(v, encodings[i]);
    for (std::size_t j = 0; j < receiver_povm.outcomes(); ++j) {
      p(i, j) = born_probability(receiver_povm.effect(j), out.matrix());
    }
  }
  clamp_roundoff(p);
  return p;
}

}  // namespace esl
