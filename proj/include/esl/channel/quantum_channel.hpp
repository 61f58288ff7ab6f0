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

// Channels in Stinespring form. An isometry V maps the sender's d_A-dim input
// into receiver (x) environment; the channel is rho -> Tr_E(V rho V^dagger).

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "esl/channel/channel_matrix.hpp"
#include "esl/tensor/complex_matrix.hpp"
#include "esl/tensor/linalg.hpp"

namespace esl {

inline constexpr double kIsometryTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;

class Isometry {
 public:
  /// v has shape (d_B*d_E) x d_A. Throws DimensionError on shape mismatch and
  /// DomainError unless V^dagger V = I within 1e-12.
  Isometry(ComplexMatrix v, BipartiteDims out);

  const ComplexMatrix& matrix() const { return v_; }
  std::size_t input_dim() const { return v_.cols(); }
  std::size_t receiver_dim() const { return out_.receiver; }
  std::size_t environment_dim() const { return out_.environment; }
  BipartiteDims output_dims() const { return out_; }

 private:
  ComplexMatrix v_;
  BipartiteDims out_;
};

class DensityMatrix {
 public:
  /// Throws DomainError unless PSD within 1e-9 and unit trace within 1e-12.
  explicit DensityMatrix(ComplexMatrix rho);

  static DensityMatrix pure(const StateVector& psi);
  /// |k><k| in dimension d.
  static DensityMatrix basis(std::size_t d, std::size_t k);

  std::size_t dim() const { return rho_.rows(); }
  const ComplexMatrix& matrix() const { return rho_; }

 private:
  ComplexMatrix rho_;
};

class Povm {
 public:
  /// Throws DomainError unless every effect is PSD within 1e-9 and the effects
  /// sum to the identity within 1e-9.
  explicit Povm(std::vector<ComplexMatrix> effects);

  /// Projective measurement in the computational basis; outcome k <-> |k>.
  static Povm computational(std::size_t d);
  /// Single-outcome measurement {I}.
  static Povm trivial(std::size_t d);

  std::size_t dim() const { return effects_.front().rows(); }
  std::size_t outcomes() const { return effects_.size(); }
  const ComplexMatrix& effect(std::size_t k) const { return effects_[k]; }
  std::span<const ComplexMatrix> effects() const { return effects_; }

 private:
  std::vector<ComplexMatrix> effects_;
};

/// Re Tr(E rho) for Hermitian E.
double born_probability(const ComplexMatrix& effect, const ComplexMatrix& rho);

/// V rho V^dagger on receiver (x) environment.
ComplexMatrix joint_output(const Isometry& v, const DensityMatrix& rho);

/// Tr_E(V rho V^dagger)
DensityMatrix channel_apply(const Isometry& v, const DensityMatrix& rho);
/// Tr_B(V rho V^dagger)
DensityMatrix complementary_apply(const Isometry& v, const DensityMatrix& rho);

/// V whose columns are the basis vectors, right-multiplied by `rotation` when
/// given (V' = V U). The range is span(basis) for every unitary rotation.
/// Throws DomainError for a basis that is not orthonormal within 1e-10 or a
/// rotation that is not unitary within 1e-12.
Isometry isometry_from_subspace_basis(std::span<const StateVector> basis,
                                      BipartiteDims out,
                                      const std::optional<ComplexMatrix>& rotation =
                                          std::nullopt);

/// P_ij = Tr[M_j channel_apply(v, rho_i)], round-off negatives clamped.
ChannelMatrix unassisted_channel_matrix(const Isometry& v,
                                        std::span<const DensityMatrix> encodings,
                                        const Povm& receiver_povm);

}  // namespace esl
