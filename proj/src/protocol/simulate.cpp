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

#include "esl/protocol/simulate.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "esl/error.hpp"

namespace esl {
namespace {

void check_dim(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want) {
    throw DimensionError(what + " has dim " + std::to_string(got) +
                         ", expected " + std::to_string(want));
  }
}

std::vector<ComplexMatrix> joint_outputs(const Isometry& v,
                                         std::span<const DensityMatrix> enc) {
  if (enc.empty()) throw DimensionError("strategy has no encodings");
  std::vector<ComplexMatrix> out;
  out.reserve(enc.size());
  for (const DensityMatrix& rho : enc) out.push_back(joint_output(v, rho));
  return out;
}

ChannelMatrix run_minimal(const Isometry& v, const MinimalStrategy& s) {
  check_dim(s.receiver_povm.dim(), v.receiver_dim(), "receiver POVM");
  check_dim(s.environment_povm.dim(), v.environment_dim(), "environment POVM");
  const DecodeKernel& q = s.kernel;
  if (q.receiver_outcomes() != s.receiver_povm.outcomes() ||
      q.env_outcomes() != s.environment_povm.outcomes()) {
    throw DimensionError("decode kernel does not cover every (l,k) outcome pair");
  }
  const auto sigma = joint_outputs(v, s.encodings);
  ChannelMatrix p(sigma.size(), q.outputs());
  for (std::size_t l = 0; l < q.receiver_outcomes(); ++l) {
    for (std::size_t k = 0; k < q.env_outcomes(); ++k) {
      const ComplexMatrix e =
          kron(s.receiver_povm.effect(l), s.environment_povm.effect(k));
      const auto dist = q.distribution(l, k);
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        const double prob = born_probability(e, sigma[i]);
        for (std::size_t j = 0; j < dist.size(); ++j) {
          if (dist[j] != 0.0) p(i, j) += dist[j] * prob;
        }
      }
    }
  }
  return p;
}

ChannelMatrix run_env_to_bob(const Isometry& v, const EnvToBobStrategy& s) {
  check_dim(s.environment_povm.dim(), v.environment_dim(), "environment POVM");
  if (s.receiver_povms.size() != s.environment_povm.outcomes()) {
    throw DimensionError("need one receiver POVM per environment outcome");
  }
  const std::size_t m = s.receiver_povms.front().outcomes();
  for (const Povm& r : s.receiver_povms) {
    check_dim(r.dim(), v.receiver_dim(), "receiver POVM");
    if (r.outcomes() != m) {
      throw DimensionError("receiver POVMs disagree on the number of outputs");
    }
  }
  const auto sigma = joint_outputs(v, s.encodings);
  ChannelMatrix p(sigma.size(), m);
  for (std::size_t k = 0; k < s.environment_povm.outcomes(); ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      const ComplexMatrix e =
          kron(s.receiver_povms[k].effect(j), s.environment_povm.effect(k));
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        p(i, j) += born_probability(e, sigma[i]);
      }
    }
  }
  return p;
}

ChannelMatrix run_bob_to_env(const Isometry& v, const BobToEnvStrategy& s) {
  check_dim(s.receiver_povm.dim(), v.receiver_dim(), "receiver POVM");
  const DecodeKernel& q = s.kernel;
  if (s.environment_povms.size() != s.receiver_povm.outcomes() ||
      q.receiver_outcomes() != s.receiver_povm.outcomes()) {
    throw DimensionError("need one environment POVM and kernel row per receiver outcome");
  }
  for (const Povm& e : s.environment_povms) {
    check_dim(e.dim(), v.environment_dim(), "environment POVM");
    if (e.outcomes() != q.env_outcomes()) {
      throw DimensionError("decode kernel does not cover every (l,k) outcome pair");
    }
  }
  const auto sigma = joint_outputs(v, s.encodings);
  ChannelMatrix p(sigma.size(), q.outputs());
  for (std::size_t l = 0; l < q.receiver_outcomes(); ++l) {
    for (std::size_t k = 0; k < q.env_outcomes(); ++k) {
      const ComplexMatrix e =
          kron(s.receiver_povm.effect(l), s.environment_povms[l].effect(k));
      const auto dist = q.distribution(l, k);
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        const double prob = born_probability(e, sigma[i]);
        for (std::size_t j = 0; j < dist.size(); ++j) {
          if (dist[j] != 0.0) p(i, j) += dist[j] * prob;
        }
      }
    }
  }
  return p;
}

}  // namespace

ChannelMatrix simulate_assisted(const Isometry& v, const AssistedStrategy& s) {
  ChannelMatrix p = std::visit(
      [&](const auto& strat) -> ChannelMatrix {
        using T = std::decay_t<decltype(strat)>;
        if constexpr (std::is_same_v<T, MinimalStrategy>) {
          return run_minimal(v, strat);
        } else if constexpr (std::is_same_v<T, EnvToBobStrategy>) {
          return run_env_to_bob(v, strat);
        } else {
          return run_bob_to_env(v, strat);
        }
      },
      s);
  clamp_roundoff(p);
  return p;
}

ChannelMatrix simulate_lone(const LoneStrategy& s) {
  const std::size_t r = s.povm.dim();
  if (s.relabel.rows() != s.povm.outcomes()) {
    throw DimensionError("relabeling has " + std::to_string(s.relabel.rows()) +
                         " rows for " + std::to_string(s.povm.outcomes()) +
                         " outcomes");
  }
  require_row_stochastic(s.relabel, "relabeling");
  ChannelMatrix p(s.encodings.size(), s.relabel.cols());
  for (std::size_t i = 0; i < s.encodings.size(); ++i) {
    check_dim(s.encodings[i].dim(), r, "encoding " + std::to_string(i));
    for (std::size_t k = 0; k < s.povm.outcomes(); ++k) {
      const double prob = born_probability(s.povm.effect(k), s.encodings[i].matrix());
      for (std::size_t j = 0; j < s.relabel.cols(); ++j) {
        p(i, j) += prob * s.relabel(k, j);
      }
    }
  }
  clamp_roundoff(p);
  return p;
}

ChannelMatrix mix(std::span<const ChannelMatrix> matrices,
                  std::span<const double> weights) {
  if (matrices.empty() || matrices.size() != weights.size()) {
    throw DimensionError("mix: need one weight per matrix");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw DomainError("mix: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("mix: weights sum to " + std::to_string(total));
  }
  ChannelMatrix out(matrices.front().rows(), matrices.front().cols());
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const ChannelMatrix& m = matrices[k];
    if (m.rows() != out.rows() || m.cols() != out.cols()) {
      throw DimensionError("mix: matrix " + std::to_string(k) + " has a different shape");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += weights[k] * m(i, j);
    }
  }
  return out;
}

}  // namespace esl
