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

#include "esl/psd/certify.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "esl/error.hpp"

namespace esl {
namespace {

struct Candidate {
  PsdFactorization f;
  double residual;
  double threshold;
  std::string source;
};

// Residual of a hint, or nullopt if it does not fit or is not PSD.
std::optional<double> check(const ChannelMatrix& m, const PsdFactorization& f) {
  try {
    return validate_factorization(m, f);
  } catch (const DimensionError&) {
    return std::nullopt;
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

void offer(std::optional<Candidate>& best, Candidate c) {
  if (!best || c.f.size < best->f.size) best = std::move(c);
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::equal ? "equal" : "gap"; }

RankCertificate certify(const ChannelMatrix& m, std::span<const PsdFactorization> hints,
                        const CertifyOptions& opts) {
  RankCertificate cert;
  LowerBound lb = lower_bound(m, opts.bounds);
  cert.lower_bound = lb.bound;
  cert.lower_method = std::move(lb.trace);

  std::optional<Candidate> best;
  for (const PsdFactorization& h : hints) {
    const auto res = check(m, h);
    if (res && *res <= opts.witness_tol) {
      offer(best, {h, *res, opts.witness_tol, "hint"});
    }
  }
  PsdFactorization classical = classical_witness(m);
  const double classical_res = validate_factorization(m, classical);
  if (opts.classical_witness) {
    offer(best, {classical, classical_res, opts.witness_tol, "classical"});
  }

  if (opts.solver_fallback) {
    const std::size_t ceiling = best ? best->f.size : classical.size;
    for (std::size_t r = static_cast<std::size_t>(std::max(cert.lower_bound, 1));
         r < ceiling; ++r) {
      SolverResult s = solve_factorization(m, r, opts.solver);
      if (s.success) {
        // Relative Frobenius success bounds the max-abs residual by
        // threshold * ||M||_F.
        double norm = 0.0;
        for (double x : m.entries()) norm += x * x;
        offer(best, {std::move(s.factorization), s.max_abs_residual,
                     opts.solver.success_threshold * std::sqrt(norm), "solver"});
        break;
      }
    }
  }
  if (!best) best = Candidate{classical, classical_res, opts.witness_tol, "classical"};

  cert.upper_bound = static_cast<int>(best->f.size);
  cert.witness = std::move(best->f);
  cert.witness_residual = best->residual;
  cert.witness_threshold = best->threshold;
  cert.witness_source = best->source;
  if (cert.upper_bound < cert.lower_bound) {
    // A validated witness below a lower bound means one of the two is wrong.
    throw std::logic_error("certify: witness of size " +
                           std::to_string(cert.upper_bound) +
                           " contradicts lower bound " +
                           std::to_string(cert.lower_bound));
  }
  cert.verdict = cert.upper_bound == cert.lower_bound ? Verdict::equal : Verdict::gap;
  return cert;
}

}  // namespace esl
