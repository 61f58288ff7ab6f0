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

#include "esl/info/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "esl/error.hpp"

namespace esl {
namespace {

// D(W_x || q) in bits for every row x.
std::vector<double> divergences(const ChannelMatrix& m, const std::vector<double>& q) {
  std::vector<double> d(m.rows(), 0.0);
  for (std::size_t x = 0; x < m.rows(); ++x) {
    double s = 0.0;
    for (std::size_t y = 0; y < m.cols(); ++y) {
      const double w = m(x, y);
      if (w > 0.0) s += w * std::log2(w / q[y]);
    }
    d[x] = s;
  }
  return d;
}

std::vector<double> output_distribution(const ChannelMatrix& m,
                                        const std::vector<double>& p) {
  std::vector<double> q(m.cols(), 0.0);
  for (std::size_t x = 0; x < m.rows(); ++x) {
    if (p[x] == 0.0) continue;
    for (std::size_t y = 0; y < m.cols(); ++y) q[y] += p[x] * m(x, y);
  }
  return q;
}

}  // namespace

double entropy_bits(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double mutual_information(const ChannelMatrix& m, std::span<const double> input) {
  if (input.size() != m.rows()) {
    throw DimensionError("mutual_information: input distribution has " +
                         std::to_string(input.size()) + " entries for " +
                         std::to_string(m.rows()) + " rows");
  }
  double total = 0.0;
  for (double x : input) {
    if (!(x >= 0.0)) throw DomainError("mutual_information: negative input probability");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("mutual_information: input distribution sums to " +
                      std::to_string(total));
  }
  std::vector<double> q(m.cols(), 0.0);
  double h_cond = 0.0;
  for (std::size_t x = 0; x < m.rows(); ++x) {
    if (input[x] == 0.0) continue;
    h_cond += input[x] * entropy_bits(m.row(x));
    for (std::size_t y = 0; y < m.cols(); ++y) q[y] += input[x] * m(x, y);
  }
  return entropy_bits(q) - h_cond;
}

CapacityResult capacity(const ChannelMatrix& m, const CapacityOptions& opts) {
  require_row_stochastic(m, "capacity");
  std::vector<bool> support = opts.support;
  if (support.empty()) support.assign(m.rows(), true);
  if (support.size() != m.rows()) {
    throw DimensionError("capacity: support mask length does not match rows");
  }
  const auto active = static_cast<std::size_t>(std::count(support.begin(), support.end(), true));
  if (active == 0) throw DomainError("capacity: empty support");

  std::vector<double> p(m.rows(), 0.0);
  for (std::size_t x = 0; x < m.rows(); ++x) {
    if (support[x]) p[x] = 1.0 / static_cast<double>(active);
  }

  CapacityResult out;
  double previous = -1.0;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    const auto q = output_distribution(m, p);
    const auto d = divergences(m, q);
    double info = 0.0;
    double worst = -1.0;
    for (std::size_t x = 0; x < m.rows(); ++x) {
      if (!support[x]) continue;
      info += p[x] * d[x];
      worst = std::max(worst, d[x]);
    }
    out.bits = info;
    out.distribution = p;
    out.iterations = it;
    out.gap = std::max(worst - info, 0.0);
    if (previous >= 0.0 && std::abs(info - previous) < opts.tol) {
      out.converged = true;
      break;
    }
    previous = info;

    double z = 0.0;
    for (std::size_t x = 0; x < m.rows(); ++x) {
      if (!support[x]) continue;
      p[x] *= std::exp2(d[x]);
      z += p[x];
    }
    for (double& px : p) px /= z;
  }
  return out;
}

double trace_fidelity(const ChannelMatrix& m) { return m.trace(); }

DerivedBound quantum_fidelity_bound(std::size_t d) {
  if (d == 0) throw DomainError("quantum_fidelity_bound: d must be >= 1");
  return {static_cast<double>(d),
          {"square matrix: Tr M <= sum_j max_i M_ij (each diagonal entry is at "
           "most its column maximum)",
           "realized by a d-level system: sum_j max_i Tr(rho_i E_j) <= sum_j "
           "Tr(E_j) = d"}};
}

DerivedBound pr_fidelity_bound_n7() {
  return {5.0,
          {"P_PR(N7) is contained in P_SR(N7 + 1 cbit): a shared unbiased bit "
           "replaces the box output a and the sent bit f(x) lets the receiver "
           "form b (checked numerically by simulate_pr_via_sr_cbit)",
           "P_SR(N7 + 1 cbit) is contained in P_SR(Q3 + Q2): the N7 output is "
           "a qutrit and a classical bit embeds in a qubit",
           "P_SR(Q3 + Q2) is contained in P_SR(Q5): cited no-hypersignaling "
           "step, recorded and not re-derived",
           "shared randomness only forms convex mixtures and the trace is "
           "linear, so F_c <= F_c(Q5) <= 5"}};
}

const char* to_string(UnlockStatus s) {
  switch (s) {
    case UnlockStatus::no_unlock:
      return "no-unlock";
    case UnlockStatus::unlock:
      return "unlock";
    case UnlockStatus::optimal_unlock:
      return "optimal-unlock";
  }
  return "unknown";
}

UnlockVerdict assess_unlock(const RankCertificate& cert, std::size_t input_dim,
                            std::size_t unassisted_dim) {
  UnlockVerdict v;
  v.certified_rank = cert.lower_bound;
  v.input_dim = input_dim;
  v.unassisted_dim = unassisted_dim;
  const auto rank = static_cast<std::size_t>(std::max(cert.lower_bound, 0));
  if (rank > unassisted_dim) {
    v.status = rank >= input_dim ? UnlockStatus::optimal_unlock : UnlockStatus::unlock;
  }
  return v;
}

}  // namespace esl
