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

// Decoding strategies for environment-assisted communication.
//
// Outcome naming follows the measurement: l for the receiver (Bob), k for the
// environment. The joint outcome (l, k) is what the receiver's local
// measurement and the environment's local measurement report for |l>|k>.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "esl/channel/quantum_channel.hpp"

namespace esl {

/// Dense table q(y | l, k).
class DecodeKernel {
 public:
  /// table is indexed [(l * env_outcomes + k) * outputs + y]. Throws
  /// DomainError if an entry is negative or a conditional distribution does
  /// not sum to 1 within 1e-12.
  DecodeKernel(std::size_t receiver_outcomes, std::size_t env_outcomes,
               std::size_t outputs, std::vector<double> table);

  /// q(y | l, k) = [y == rule(l, k)].
  static DecodeKernel deterministic(
      std::size_t receiver_outcomes, std::size_t env_outcomes,
      std::size_t outputs,
      const std::function<std::size_t(std::size_t, std::size_t)>& rule);

  std::size_t receiver_outcomes() const { return receiver_outcomes_; }
  std::size_t env_outcomes() const { return env_outcomes_; }
  std::size_t outputs() const { return outputs_; }

  double operator()(std::size_t y, std::size_t l, std::size_t k) const {
    return table_[(l * env_outcomes_ + k) * outputs_ + y];
  }
  std::span<const double> distribution(std::size_t l, std::size_t k) const {
    return std::span<const double>(table_).subspan(
        (l * env_outcomes_ + k) * outputs_, outputs_);
  }

 private:
  std::size_t receiver_outcomes_;
  std::size_t env_outcomes_;
  std::size_t outputs_;
  std::vector<double> table_;
};

/// Receiver and environment measure locally, no communication; the kernel
/// merges the two outcomes.
struct MinimalStrategy {
  std::vector<DensityMatrix> encodings;
  Povm receiver_povm;
  Povm environment_povm;
  DecodeKernel kernel;
};

/// Environment measures first and tells the receiver k; the receiver then
/// measures {Lambda_{j|k}}_j and outputs j directly.
struct EnvToBobStrategy {
  std::vector<DensityMatrix> encodings;
  Povm environment_povm;
  std::vector<Povm> receiver_povms;  // indexed by k
};

/// Receiver measures first and tells the environment l; the environment
/// measures {Lambda_{k|l}}_k and the kernel merges (l, k).
struct BobToEnvStrategy {
  std::vector<DensityMatrix> encodings;
  Povm receiver_povm;
  std::vector<Povm> environment_povms;  // indexed by l
  DecodeKernel kernel;
};

enum class Assistance { minimal, env_to_bob, bob_to_env };

using AssistedStrategy =
    std::variant<MinimalStrategy, EnvToBobStrategy, BobToEnvStrategy>;

Assistance assistance_of(const AssistedStrategy& s);
const char* to_string(Assistance a);

/// Isometry plus the strategy run on it.
struct AssistedProtocol {
  Isometry isometry;
  MinimalStrategy strategy;
};

/// N_7 with the tabulated minimal-assistance decoding. The isometry is built
/// from canonical_basis_7() and right-multiplied by `rotation` when given; the
/// encodings are rotation^dagger |i>, so V|xi_i> = psi_i either way.
/// Throws DomainError unless 0 <= p <= 1.
AssistedProtocol strategy_n7(double p,
                             const std::optional<ComplexMatrix>& rotation =
                                 std::nullopt);

/// N_{d^2-1} with the general-d decoding:
///   l != k       -> y_{product_index(l, k, d)}
///   l == k <= 1  -> y_0
///   l == k >= 2  -> y_{l-1}
AssistedProtocol strategy_general(std::size_t d);

/// Same matrix as `s`, written as an env_to_bob strategy with
/// Lambda_{j|k} = sum_l q(j|l,k) Lambda_l.
EnvToBobStrategy as_env_to_bob(const MinimalStrategy& s);
/// Same matrix as `s`, written as a bob_to_env strategy whose environment
/// POVM ignores l.
BobToEnvStrategy as_bob_to_env(const MinimalStrategy& s);

/// A single d-level system: encodings, one POVM, and a stochastic relabeling
/// q(y | outcome) stored as an outcomes x outputs row-stochastic matrix.
struct LoneStrategy {
  std::vector<DensityMatrix> encodings;
  Povm povm;
  ChannelMatrix relabel;
};

/// 7-level computational encoding and measurement; outcomes 0..4 map to
/// y_0..y_4, outcome 5 to (y_5, y_6) w.p. (p, 1-p), outcome 6 to
/// (p/3, 1-p/3).
LoneStrategy lone_strategy_m7(double p);

/// (d^2-1)-level computational encoding and measurement; outcome k in
/// 1..d-2 is randomized over y_0..y_k with weights
/// 2/((k+1)(k+2)), 1/((k+1)(k+2)), ..., (k+1)/(k+2); every other outcome is
/// reported as is.
LoneStrategy lone_strategy_general(std::size_t d);

}  // namespace esl
