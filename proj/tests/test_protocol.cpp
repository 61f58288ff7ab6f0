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
#include <random>

#include "esl/channel/sampling.hpp"
#include "esl/constructions.hpp"
#include "esl/error.hpp"
#include "esl/protocol/pr_box.hpp"
#include "esl/protocol/simulate.hpp"
#include "esl/protocol/strategies.hpp"

namespace esl {
namespace {

// Independent closed form, written out here rather than calling matrix_m7.
ChannelMatrix m7_oracle(double p) {
  ChannelMatrix m(7, 7);
  for (std::size_t i = 0; i < 5; ++i) m(i, i) = 1.0;
  m(5, 5) = p;
  m(5, 6) = 1.0 - p;
  m(6, 5) = p / 3.0;
  m(6, 6) = 1.0 - p / 3.0;
  return m;
}

// Tr[(A (x) B) V rho V^dagger] by explicit index sums.
double joint_probability(const Isometry& v, const ComplexMatrix& rho, const ComplexMatrix& a,
                         const ComplexMatrix& b) {
  const std::size_t db = v.receiver_dim(), de = v.environment_dim(), da = v.input_dim();
  const ComplexMatrix& m = v.matrix();
  ComplexMatrix omega(db * de, db * de);
  for (std::size_t r = 0; r < db * de; ++r)
    for (std::size_t c = 0; c < db * de; ++c)
      for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < da; ++y)
          omega(r, c) += m(r, x) * rho(x, y) * std::conj(m(c, y));
  cplx s = 0.0;
  for (std::size_t b1 = 0; b1 < db; ++b1)
    for (std::size_t b2 = 0; b2 < db; ++b2)
      for (std::size_t e1 = 0; e1 < de; ++e1)
        for (std::size_t e2 = 0; e2 < de; ++e2)
          s += a(b1, b2) * b(e1, e2) * omega(b2 * de + e2, b1 * de + e1);
  return s.real();
}

ChannelMatrix minimal_oracle(const Isometry& v, const MinimalStrategy& s) {
  const std::size_t outs = s.kernel.outputs();
  ChannelMatrix out(s.encodings.size(), outs);
  for (std::size_t i = 0; i < s.encodings.size(); ++i)
    for (std::size_t l = 0; l < s.receiver_povm.outcomes(); ++l)
      for (std::size_t k = 0; k < s.environment_povm.outcomes(); ++k) {
        const double pr = joint_probability(v, s.encodings[i].matrix(),
                                            s.receiver_povm.effect(l),
                                            s.environment_povm.effect(k));
        for (std::size_t y = 0; y < outs; ++y) out(i, y) += s.kernel(y, l, k) * pr;
      }
  return out;
}

DecodeKernel random_kernel(std::size_t l, std::size_t k, std::size_t outs, bool ignore_k,
                           std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> t(l * k * outs);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      double total = 0.0;
      for (std::size_t y = 0; y < outs; ++y) {
        const std::size_t src = ((a * k + (ignore_k ? 0 : b)) * outs + y);
        t[(a * k + b) * outs + y] = ignore_k && b > 0 ? t[src] : u(rng);
        total += t[(a * k + b) * outs + y];
      }
      if (!ignore_k || b == 0)
        for (std::size_t y = 0; y < outs; ++y) t[(a * k + b) * outs + y] /= total;
    }
  return DecodeKernel(l, k, outs, std::move(t));
}

struct RandomSetup {
  Isometry v;
  MinimalStrategy s;
};

RandomSetup random_minimal(std::uint64_t seed, bool ignore_k = false) {
  std::mt19937_64 rng(mix_seed(seed));
  const std::size_t da = 2 + seed % 4;
  Isometry v = random_isometry(da, {2, 3}, rng);
  std::vector<DensityMatrix> enc;
  for (int i = 0; i < 4; ++i) enc.push_back(random_density(da, rng));
  Povm pb = random_povm(2, 3, rng);
  Povm pe = random_povm(3, 2, rng);
  DecodeKernel q = random_kernel(3, 2, 4, ignore_k, rng);
  return {std::move(v), {std::move(enc), std::move(pb), std::move(pe), std::move(q)}};
}

TEST(DecodeKernel, Validation) {
  EXPECT_THROW(DecodeKernel(1, 1, 2, {0.5, 0.4}), DomainError);
  EXPECT_THROW(DecodeKernel(1, 1, 2, {1.5, -0.5}), DomainError);
  EXPECT_THROW(DecodeKernel(1, 1, 2, {1.0}), DimensionError);
  const auto q = DecodeKernel::deterministic(2, 2, 3, [](std::size_t l, std::size_t k) {
    return l + k;
  });
  EXPECT_EQ(q(2, 1, 1), 1.0);
  EXPECT_EQ(q(1, 1, 1), 0.0);
  EXPECT_THROW(DecodeKernel::deterministic(2, 2, 2, [](std::size_t l, std::size_t k) {
                 return l + k;
               }),
               DomainError);
}

TEST(StrategyN7, ReproducesClosedFormOnGrid) {
  for (int step = 0; step <= 20; ++step) {
    const double p = step / 20.0;
    const auto proto = strategy_n7(p);
    const ChannelMatrix sim = simulate_assisted(proto.isometry, proto.strategy);
    EXPECT_LT(max_abs_diff(sim, m7_oracle(p)), 1e-12) << p;
    EXPECT_TRUE(is_row_stochastic(sim));
  }
  EXPECT_THROW(strategy_n7(1.5), DomainError);
}

TEST(StrategyN7, TableRowsForX6X7) {
  const auto proto = strategy_n7(0.75);
  const ChannelMatrix sim = simulate_assisted(proto.isometry, proto.strategy);
  EXPECT_NEAR(sim(5, 5), 0.75, 1e-12);
  EXPECT_NEAR(sim(5, 6), 0.25, 1e-12);
  EXPECT_NEAR(sim(6, 5), 0.25, 1e-12);
  EXPECT_NEAR(sim(6, 6), 0.75, 1e-12);
}

TEST(StrategyN7, MatchesIndexSumOracle) {
  const auto proto = strategy_n7(0.4, haar_random_unitary(7, 77));
  EXPECT_LT(max_abs_diff(simulate_assisted(proto.isometry, proto.strategy),
                         minimal_oracle(proto.isometry, proto.strategy)),
            1e-12);
}

TEST(StrategyN7, RotationInvariance) {
  for (std::uint64_t seed : {7u, 1u, 2u, 3u, 4u}) {
    const ComplexMatrix u = haar_random_unitary(7, seed);
    for (double p : {0.0, 0.5, 1.0}) {
      const auto proto = strategy_n7(p, u);
      EXPECT_LT(max_abs_diff(simulate_assisted(proto.isometry, proto.strategy), m7_oracle(p)),
                1e-12);
    }
  }
}

TEST(StrategyGeneral, ColumnFormulas) {
  for (std::size_t d = 3; d <= 5; ++d) {
    const auto proto = strategy_general(d);
    const ChannelMatrix sim = simulate_assisted(proto.isometry, proto.strategy);
    EXPECT_LT(max_abs_diff(sim, matrix_general(d)), 1e-12);
    for (std::size_t k = 1; k + 1 < d; ++k) {
      const double a = k + 1.0, b = k + 2.0;
      EXPECT_NEAR(sim(k, 0), 2.0 / (a * b), 1e-12);
      for (std::size_t j = 1; j < k; ++j) EXPECT_NEAR(sim(k, j), 1.0 / (a * b), 1e-12);
      EXPECT_NEAR(sim(k, k), a / b, 1e-12);
    }
    EXPECT_NEAR(sim(0, 0), 1.0, 1e-12);
    for (std::size_t k = d - 1; k < d * d - 1; ++k) EXPECT_NEAR(sim(k, k), 1.0, 1e-12);
  }
  EXPECT_THROW(strategy_general(2), DomainError);
}

TEST(Assisted, EmbeddingsReproduceMinimalMatrix) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = random_minimal(seed);
    const ChannelMatrix m = simulate_assisted(r.v, r.s);
    EXPECT_LT(max_abs_diff(m, minimal_oracle(r.v, r.s)), 1e-12);
    EXPECT_LT(max_abs_diff(simulate_assisted(r.v, as_env_to_bob(r.s)), m), 1e-12);
    EXPECT_LT(max_abs_diff(simulate_assisted(r.v, as_bob_to_env(r.s)), m), 1e-12);
    EXPECT_TRUE(is_row_stochastic(m));
  }
  const auto proto = strategy_n7(0.3);
  const ChannelMatrix m = matrix_m7(0.3);
  EXPECT_LT(max_abs_diff(simulate_assisted(proto.isometry, as_env_to_bob(proto.strategy)), m),
            1e-12);
  EXPECT_LT(max_abs_diff(simulate_assisted(proto.isometry, as_bob_to_env(proto.strategy)), m),
            1e-12);
}

TEST(Assisted, KIndependentKernelGivesKIndependentPovms) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = random_minimal(100 + seed, true);
    const EnvToBobStrategy e = as_env_to_bob(r.s);
    ASSERT_EQ(e.receiver_povms.size(), 2u);
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_LT(max_abs_diff(e.receiver_povms[0].effect(j), e.receiver_povms[1].effect(j)),
                1e-14);
    }
    EXPECT_LT(max_abs_diff(simulate_assisted(r.v, e), simulate_assisted(r.v, r.s)), 1e-12);
  }
}

TEST(Assisted, TrivialEnvironmentEqualsUnassisted) {
  std::mt19937_64 rng(4);
  const Isometry v = random_isometry(3, {3, 2}, rng);
  std::vector<DensityMatrix> enc;
  for (int i = 0; i < 3; ++i) enc.push_back(random_density(3, rng));
  const Povm pb = random_povm(3, 3, rng);
  const auto q = DecodeKernel::deterministic(3, 1, 3, [](std::size_t l, std::size_t) {
    return l;
  });
  const MinimalStrategy s{enc, pb, Povm::trivial(2), q};
  EXPECT_LT(max_abs_diff(simulate_assisted(v, s), unassisted_channel_matrix(v, enc, pb)),
            1e-12);
}

TEST(Assisted, DimensionErrors) {
  auto r = random_minimal(3);
  r.s.environment_povm = Povm::computational(2);
  EXPECT_THROW(simulate_assisted(r.v, r.s), DimensionError);
  EnvToBobStrategy e = as_env_to_bob(random_minimal(3).s);
  e.receiver_povms.pop_back();
  EXPECT_THROW(simulate_assisted(random_minimal(3).v, e), DimensionError);
}

TEST(LoneStrategy, ReproducesFamilies) {
  for (double p : {0.0, 0.3, 1.0}) {
    EXPECT_LT(max_abs_diff(simulate_lone(lone_strategy_m7(p)), m7_oracle(p)), 1e-12);
  }
  for (std::size_t d = 3; d <= 5; ++d) {
    EXPECT_LT(max_abs_diff(simulate_lone(lone_strategy_general(d)), matrix_general(d)),
              1e-12);
  }
}

TEST(Mix, ConvexCombinations) {
  const ChannelMatrix id = ChannelMatrix::identity(2);
  const ChannelMatrix swap{{0.0, 1.0}, {1.0, 0.0}};
  const std::vector<ChannelMatrix> ms = {id, swap};
  const std::vector<double> half = {0.5, 0.5};
  EXPECT_EQ(mix(ms, half), (ChannelMatrix{{0.5, 0.5}, {0.5, 0.5}}));
  const std::vector<ChannelMatrix> one = {swap};
  const std::vector<double> w1 = {1.0};
  EXPECT_EQ(mix(one, w1), swap);
  const std::vector<double> bad = {0.7, 0.7};
  EXPECT_THROW(mix(ms, bad), DomainError);
  const std::vector<double> neg = {1.5, -0.5};
  EXPECT_THROW(mix(ms, neg), DomainError);
  const std::vector<ChannelMatrix> shapes = {id, ChannelMatrix::identity(3)};
  EXPECT_THROW(mix(shapes, half), DimensionError);
}

TEST(Mix, TraceIsLinear) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<ChannelMatrix> ms;
    std::vector<double> w;
    double total = 0.0;
    for (int k = 0; k < 3; ++k) {
      ChannelMatrix m(4, 4);
      for (std::size_t i = 0; i < 4; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < 4; ++j) s += (m(i, j) = u(rng));
        for (std::size_t j = 0; j < 4; ++j) m(i, j) /= s;
      }
      ms.push_back(m);
      w.push_back(u(rng));
      total += w.back();
    }
    double expected = 0.0;
    for (int k = 0; k < 3; ++k) {
      w[k] /= total;
      expected += w[k] * ms[k].trace();
    }
    EXPECT_NEAR(mix(ms, w).trace(), expected, 1e-12);
  }
}

TEST(PrBox, Distribution) {
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v) {
      double total = 0.0, a1 = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          total += pr_box(a, b, u, v);
          if (a == 1) a1 += pr_box(a, b, u, v);
          if (pr_box(a, b, u, v) > 0.0) {
            EXPECT_EQ(a ^ b, u & v);
          }
        }
      EXPECT_EQ(total, 1.0);
      EXPECT_EQ(a1, 0.5);
    }
}

TEST(PrBox, EqualsSharedRandomnessPlusBit) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const PrStrategy s = random_pr_strategy(2 + t % 5, 2 + t % 4, rng);
    const ChannelMatrix a = simulate_pr(s);
    EXPECT_TRUE(is_row_stochastic(a));
    EXPECT_LT(max_abs_diff(a, simulate_pr_via_sr_cbit(s)), 1e-12);
  }
}

TEST(PrBox, ConstantFIsSharedRandomness) {
  std::mt19937_64 rng(5);
  const Isometry v = isometry_from_subspace_basis(canonical_basis_7(), kN7Dims);
  std::vector<DensityMatrix> prep0, prep1;
  for (int x = 0; x < 3; ++x) {
    prep0.push_back(random_density(7, rng));
    prep1.push_back(random_density(7, rng));
  }
  const Povm povm = random_povm(3, 3, rng);
  const std::vector<std::size_t> dec0 = {0, 1, 2}, dec1 = {2, 2, 0};
  const PrStrategy s = pr_from_shared_bit(v, prep0, prep1, povm, dec0, dec1, 3);
  // Average of the two deterministic branches, computed without the box.
  ChannelMatrix branch0 = unassisted_channel_matrix(v, prep0, povm);
  ChannelMatrix branch1 = unassisted_channel_matrix(v, prep1, povm);
  ChannelMatrix expected(3, 3);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t j = 0; j < 3; ++j) {
      expected(x, dec0[j]) += 0.5 * branch0(x, j);
      expected(x, dec1[j]) += 0.5 * branch1(x, j);
    }
  EXPECT_LT(max_abs_diff(simulate_pr(s), expected), 1e-12);
  EXPECT_LT(max_abs_diff(simulate_pr_via_sr_cbit(s), expected), 1e-12);
}

TEST(PrBox, PrepIgnoringAIsRelabeledUnassisted) {
  std::mt19937_64 rng(6);
  PrStrategy s = random_pr_strategy(3, 3, rng);
  for (std::size_t x = 0; x < 3; ++x) s.prep[2 * x + 1] = s.prep[2 * x];
  std::vector<DensityMatrix> enc;
  for (std::size_t x = 0; x < 3; ++x) enc.push_back(s.prep[2 * x]);
  const ChannelMatrix base = unassisted_channel_matrix(s.isometry, enc, s.receiver_povm);
  ChannelMatrix expected(3, 3);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t j = 0; j < 3; ++j) {
      // b is uniform given x and j whatever f(x)g(j) is.
      expected(x, s.dec[j][0]) += 0.5 * base(x, j);
      expected(x, s.dec[j][1]) += 0.5 * base(x, j);
    }
  EXPECT_LT(max_abs_diff(simulate_pr(s), expected), 1e-12);
}

TEST(PrBox, Validation) {
  std::mt19937_64 rng(7);
  PrStrategy s = random_pr_strategy(3, 2, rng);
  PrStrategy bad = s;
  bad.f[0] = 2;
  EXPECT_THROW(simulate_pr(bad), DomainError);
  bad = s;
  bad.prep.pop_back();
  EXPECT_THROW(simulate_pr(bad), DimensionError);
  bad = s;
  bad.dec[0][1] = 3;
  EXPECT_THROW(simulate_pr(bad), DomainError);
}

}  // namespace
}  // namespace esl
