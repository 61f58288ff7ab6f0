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

#include "esl/protocol/strategies.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "esl/constructions.hpp"
#include "esl/error.hpp"

namespace esl {
namespace {

std::vector<DensityMatrix> computational_states(std::size_t d) {
  std::vector<DensityMatrix> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(DensityMatrix::basis(d, i));
  return out;
}

// rotation^dagger |i><i| rotation for every i.
std::vector<DensityMatrix> rotated_states(const ComplexMatrix& u) {
  const ComplexMatrix ud = u.adjoint();
  std::vector<DensityMatrix> out;
  out.reserve(u.cols());
  for (std::size_t i = 0; i < u.cols(); ++i) {
    std::vector<cplx> col = ud.column(i);
    out.push_back(DensityMatrix::pure(StateVector::normalized(std::move(col))));
  }
  return out;
}

}  // namespace

DecodeKernel::DecodeKernel(std::size_t receiver_outcomes,
                           std::size_t env_outcomes, std::size_t outputs,
                           std::vector<double> table)
    : receiver_outcomes_(receiver_outcomes),
      env_outcomes_(env_outcomes),
      outputs_(outputs),
      table_(std::move(table)) {
  if (receiver_outcomes_ == 0 || env_outcomes_ == 0 || outputs_ == 0) {
    throw DimensionError("DecodeKernel: all outcome counts must be positive");
  }
  if (table_.size() != receiver_outcomes_ * env_outcomes_ * outputs_) {
    throw DimensionError("DecodeKernel: table has " +
                         std::to_string(table_.size()) + " entries, expected " +
                         std::to_string(receiver_outcomes_ * env_outcomes_ *
                                        outputs_));
  }
  for (std::size_t l = 0; l < receiver_outcomes_; ++l) {
    for (std::size_t k = 0; k < env_outcomes_; ++k) {
      const auto q = distribution(l, k);
      for (double x : q) {
        if (!(x >= 0.0)) {
          throw DomainError("DecodeKernel: negative or NaN weight at (l,k)=(" +
                            std::to_string(l) + "," + std::to_string(k) + ")");
        }
      }
      const double s = std::accumulate(q.begin(), q.end(), 0.0);
      if (std::abs(s - 1.0) > 1e-12) {
        throw DomainError("DecodeKernel: q(.|" + std::to_string(l) + "," +
                          std::to_string(k) + ") sums to " + std::to_string(s));
      }
    }
  }
}

DecodeKernel DecodeKernel::deterministic(
    std::size_t receiver_outcomes, std::size_t env_outcomes, std::size_t outputs,
    const std::function<std::size_t(std::size_t, std::size_t)>& rule) {
  std::vector<double> table(receiver_outcomes * env_outcomes * outputs, 0.0);
  for (std::size_t l = 0; l < receiver_outcomes; ++l) {
    for (std::size_t k = 0; k < env_outcomes; ++k) {
      const std::size_t y = rule(l, k);
      if (y >= outputs) {
        throw DomainError("DecodeKernel: rule output out of range");
      }
      table[(l * env_outcomes + k) * outputs + y] = 1.0;
    }
  }
  return DecodeKernel(receiver_outcomes, env_outcomes, outputs, std::move(table));
}

Assistance assistance_of(const AssistedStrategy& s) {
  return static_cast<Assistance>(s.index());
}

const char* to_string(Assistance a) {
  switch (a) {
    case Assistance::minimal:
      return "minimal";
    case Assistance::env_to_bob:
      return "env_to_bob";
    case Assistance::bob_to_env:
      return "bob_to_env";
  }
  return "unknown";
}

AssistedProtocol strategy_n7(double p, const std::optional<ComplexMatrix>& rotation) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("strategy_n7: p must lie in [0,1], got " + std::to_string(p));
  }
  const auto basis = canonical_basis_7();
  Isometry v = isometry_from_subspace_basis(basis, kN7Dims, rotation);
  std::vector<DensityMatrix> enc =
      rotation ? rotated_states(*rotation) : computational_states(7);

  // (l, k) -> y, following the product kets of the basis; the two
  // entangled outputs share the diagonal outcomes.
  std::vector<double> table(3 * 3 * 7, 0.0);
  auto set = [&](std::size_t l, std::size_t k, std::size_t y, double w) {
    table[(l * 3 + k) * 7 + y] = w;
  };
  set(0, 2, 0, 1.0);
  set(1, 0, 1, 1.0);
  set(1, 2, 2, 1.0);
  set(2, 0, 3, 1.0);
  set(2, 1, 4, 1.0);
  for (std::size_t m : {0, 1}) {
    set(m, m, 5, p);
    set(m, m, 6, 1.0 - p);
  }
  set(2, 2, 6, 1.0);
  set(0, 1, 6, 1.0);  // never observed for in-range inputs

  return {std::move(v),
          MinimalStrategy{std::move(enc), Povm::computational(3),
                          Povm::computational(3),
                          DecodeKernel(3, 3, 7, std::move(table))}};
}

AssistedProtocol strategy_general(std::size_t d) {
  const auto basis = canonical_basis_general(d);
  const std::size_t n = d * d - 1;
  Isometry v = isometry_from_subspace_basis(basis, {d, d});
  auto rule = [d](std::size_t l, std::size_t k) -> std::size_t {
    if (l != k) return product_index(l, k, d);
    return l <= 1 ? 0 : l - 1;
  };
  return {std::move(v),
          MinimalStrategy{computational_states(n), Povm::computational(d),
                          Povm::computational(d),
                          DecodeKernel::deterministic(d, d, n, rule)}};
}

EnvToBobStrategy as_env_to_bob(const MinimalStrategy& s) {
  const DecodeKernel& q = s.kernel;
  const std::size_t db = s.receiver_povm.dim();
  std::vector<Povm> family;
  family.reserve(q.env_outcomes());
  for (std::size_t k = 0; k < q.env_outcomes(); ++k) {
    std::vector<ComplexMatrix> effects(q.outputs(), ComplexMatrix(db, db));
    for (std::size_t j = 0; j < q.outputs(); ++j) {
      for (std::size_t l = 0; l < q.receiver_outcomes(); ++l) {
        const double w = q(j, l, k);
        if (w != 0.0) effects[j] += w * s.receiver_povm.effect(l);
      }
    }
    family.emplace_back(std::move(effects));
  }
  return {s.encodings, s.environment_povm, std::move(family)};
}

BobToEnvStrategy as_bob_to_env(const MinimalStrategy& s) {
  std::vector<Povm> family(s.receiver_povm.outcomes(), s.environment_povm);
  return {s.encodings, s.receiver_povm, std::move(family), s.kernel};
}

LoneStrategy lone_strategy_m7(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("lone_strategy_m7: p must lie in [0,1], got " +
                      std::to_string(p));
  }
  ChannelMatrix relabel(7, 7);
  for (std::size_t j = 0; j < 5; ++j) relabel(j, j) = 1.0;
  relabel(5, 5) = p;
  relabel(5, 6) = 1.0 - p;
  relabel(6, 5) = p / 3.0;
  relabel(6, 6) = 1.0 - p / 3.0;
  return {computational_states(7), Povm::computational(7), std::move(relabel)};
}

LoneStrategy lone_strategy_general(std::size_t d) {
  if (d < 3) throw DomainError("lone_strategy_general: d must be >= 3");
  const std::size_t n = d * d - 1;
  ChannelMatrix relabel(n, n);
  relabel(0, 0) = 1.0;
  for (std::size_t k = 1; k + 1 < d; ++k) {
    const double a = static_cast<double>(k + 1);
    const double b = static_cast<double>(k + 2);
    relabel(k, 0) = 2.0 / (a * b);
    for (std::size_t j = 1; j < k; ++j) relabel(k, j) = 1.0 / (a * b);
    relabel(k, k) = a / b;
  }
  for (std::size_t k = d - 1; k < n; ++k) relabel(k, k) = 1.0;
  return {computational_states(n), Povm::computational(n), std::move(relabel)};
}

}  // namespace esl
