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

// One use of a PR box per transmission: the sender queries with f(x) and gets
// a, prepares rho(x, a) and sends it; the receiver measures, gets j, queries
// with g(j), gets b with a xor b = f(x) g(j), and outputs dec(j, b).

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "esl/channel/quantum_channel.hpp"

namespace esl {

struct PrStrategy {
  Isometry isometry;
  std::vector<int> f;                  // input x -> bit
  std::vector<DensityMatrix> prep;     // index 2*x + a
  Povm receiver_povm;
  std::vector<int> g;                  // receiver outcome j -> bit
  std::vector<std::array<std::size_t, 2>> dec;  // dec[j][b] -> output label
  std::size_t outputs;

  std::size_t inputs() const { return f.size(); }
};

/// Throws DimensionError / DomainError if any table is incomplete, a bit is
/// not 0/1, or dimensions disagree with the isometry.
void validate(const PrStrategy& s);

/// p(a, b | u, v) = 1/2 [a xor b = u v]
double pr_box(int a, int b, int u, int v);

/// P(y|x) = sum_{a,b} sum_j p(a,b | f(x), g(j)) Tr[M_j N(rho(x,a))] [y = dec(j,b)]
ChannelMatrix simulate_pr(const PrStrategy& s);

/// Same strategy with the box replaced by an unbiased shared bit lambda
/// (a = lambda) and one classical bit f(x) sent alongside the system; the
/// receiver sets b = lambda xor f(x) g(j).
ChannelMatrix simulate_pr_via_sr_cbit(const PrStrategy& s);

/// Random strategy over a Haar-rotated N_7 isometry: n inputs, n outputs,
/// random pure preparations, an m-outcome random receiver POVM, uniformly
/// random f, g and dec.
PrStrategy random_pr_strategy(std::size_t n, std::size_t povm_outcomes,
                              std::mt19937_64& rng);

/// Shared-randomness mixture of two unassisted strategies written as a PR
/// strategy that never exploits the box (f = 0, so b = a): branch a uses
/// preparations prep_a and decoding dec_a. The result equals
/// (P_0 + P_1)/2.
PrStrategy pr_from_shared_bit(const Isometry& v,
                              const std::vector<DensityMatrix>& prep0,
                              const std::vector<DensityMatrix>& prep1,
                              const Povm& povm,
                              const std::vector<std::size_t>& dec0,
                              const std::vector<std::size_t>& dec1,
                              std::size_t outputs);

}  // namespace esl
