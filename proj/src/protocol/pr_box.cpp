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

#include "esl/protocol/pr_box.hpp"

#include <string>

#include "esl/channel/sampling.hpp"
#include "esl/constructions.hpp"
#include "esl/error.hpp"

namespace esl {
namespace {

bool is_bit(int b) { return b == 0 || b == 1; }

// Tr[M_j N(rho(x, a))] for every (x, a, j), indexed [(2x + a) * m + j].
std::vector<double> receiver_statistics(const PrStrategy& s) {
  const std::size_t m = s.receiver_povm.outcomes();
  std::vector<double> t(s.prep.size() * m);
  for (std::size_t xa = 0; xa < s.prep.size(); ++xa) {
    const DensityMatrix out = channel_apply(s.isometry, s.prep[xa]);
    for (std::size_t j = 0; j < m; ++j) {
      t[xa * m + j] = born_probability(s.receiver_povm.effect(j), out.matrix());
    }
  }
  return t;
}

}  // namespace

void validate(const PrStrategy& s) {
  const std::size_t n = s.f.size();
  const std::size_t m = s.receiver_povm.outcomes();
  if (n == 0) throw DimensionError("PrStrategy: no inputs");
  if (s.prep.size() != 2 * n) {
    throw DimensionError("PrStrategy: need a preparation for every (x, a)");
  }
  if (s.g.size() != m || s.dec.size() != m) {
    throw DimensionError("PrStrategy: g and dec must cover every receiver outcome");
  }
  if (s.receiver_povm.dim() != s.isometry.receiver_dim()) {
    throw DimensionError("PrStrategy: receiver POVM dim does not match the channel");
  }
  for (const DensityMatrix& rho : s.prep) {
    if (rho.dim() != s.isometry.input_dim()) {
      throw DimensionError("PrStrategy: preparation dim does not match the channel");
    }
  }
  for (int b : s.f) {
    if (!is_bit(b)) throw DomainError("PrStrategy: f must be 0/1 valued");
  }
  for (int b : s.g) {
    if (!is_bit(b)) throw DomainError("PrStrategy: g must be 0/1 valued");
  }
  for (const auto& row : s.dec) {
    if (row[0] >= s.outputs || row[1] >= s.outputs) {
      throw DomainError("PrStrategy: dec label out of range");
    }
  }
}

double pr_box(int a, int b, int u, int v) {
  return ((a ^ b) == (u & v)) ? 0.5 : 0.0;
}

ChannelMatrix simulate_pr(const PrStrategy& s) {
  validate(s);
  const std::size_t m = s.receiver_povm.outcomes();
  const auto t = receiver_statistics(s);
  ChannelMatrix p(s.inputs(), s.outputs);
  for (std::size_t x = 0; x < s.inputs(); ++x) {
    for (int a = 0; a < 2; ++a) {
      for (std::size_t j = 0; j < m; ++j) {
        const double tj = t[(2 * x + static_cast<std::size_t>(a)) * m + j];
        for (int b = 0; b < 2; ++b) {
          const double w = pr_box(a, b, s.f[x], s.g[j]);
          if (w != 0.0) p(x, s.dec[j][static_cast<std::size_t>(b)]) += w * tj;
        }
      }
    }
  }
  clamp_roundoff(p);
  return p;
}

ChannelMatrix simulate_pr_via_sr_cbit(const PrStrategy& s) {
  validate(s);
  const std::size_t m = s.receiver_povm.outcomes();
  const auto t = receiver_statistics(s);
  ChannelMatrix p(s.inputs(), s.outputs);
  for (std::size_t x = 0; x < s.inputs(); ++x) {
    const int cbit = s.f[x];
    for (int lambda = 0; lambda < 2; ++lambda) {
      const int a = lambda;
      for (std::size_t j = 0; j < m; ++j) {
        const int b = lambda ^ (cbit & s.g[j]);
        p(x, s.dec[j][static_cast<std::size_t>(b)]) +=
            0.5 * t[(2 * x + static_cast<std::size_t>(a)) * m + j];
      }
    }
  }
  clamp_roundoff(p);
  return p;
}

PrStrategy random_pr_strategy(std::size_t n, std::size_t povm_outcomes,
                              std::mt19937_64& rng) {
  if (n == 0 || povm_outcomes == 0) {
    throw DomainError("random_pr_strategy: need inputs and outcomes");
  }
  const ComplexMatrix u = haar_random_unitary(7, rng());
  Isometry v = isometry_from_subspace_basis(canonical_basis_7(), kN7Dims, u);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<std::size_t> label(0, n - 1);

  std::vector<int> f(n);
  for (int& b : f) b = bit(rng);
  std::vector<DensityMatrix> prep;
  prep.reserve(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    prep.push_back(DensityMatrix::pure(random_pure_state(7, rng)));
  }
  Povm povm = random_povm(3, povm_outcomes, rng);
  std::vector<int> g(povm_outcomes);
  for (int& b : g) b = bit(rng);
  std::vector<std::array<std::size_t, 2>> dec(povm_outcomes);
  for (auto& row : dec) row = {label(rng), label(rng)};
  return {std::move(v), std::move(f), std::move(prep), std::move(povm),
          std::move(g), std::move(dec), n};
}

PrStrategy pr_from_shared_bit(const Isometry& v,
                              const std::vector<DensityMatrix>& prep0,
                              const std::vector<DensityMatrix>& prep1,
                              const Povm& povm,
                              const std::vector<std::size_t>& dec0,
                              const std::vector<std::size_t>& dec1,
                              std::size_t outputs) {
  if (prep0.size() != prep1.size() || dec0.size() != povm.outcomes() ||
      dec1.size() != povm.outcomes()) {
    throw DimensionError("pr_from_shared_bit: branch tables disagree in size");
  }
  std::vector<DensityMatrix> prep;
  prep.reserve(2 * prep0.size());
  for (std::size_t x = 0; x < prep0.size(); ++x) {
    prep.push_back(prep0[x]);
    prep.push_back(prep1[x]);
  }
  std::vector<std::array<std::size_t, 2>> dec(povm.outcomes());
  for (std::size_t j = 0; j < dec.size(); ++j) dec[j] = {dec0[j], dec1[j]};
  PrStrategy s{v,
               std::vector<int>(prep0.size(), 0),
               std::move(prep),
               povm,
               std::vector<int>(povm.outcomes(), 0),
               std::move(dec),
               outputs};
  validate(s);
  return s;
}

}  // namespace esl
