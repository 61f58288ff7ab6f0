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

// Preset experiments behind the command-line verbs. Each returns a report;
// writing files is left to the caller.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esl/channel/channel_matrix.hpp"
#include "esl/info/measures.hpp"
#include "esl/psd/certify.hpp"
#include "esl/report/config.hpp"
#include "esl/report/report.hpp"

namespace esl {

struct ExperimentSettings {
  std::uint64_t seed = 1;
  bool parallel = false;
  double simulate_tol = 1e-12;
  CertifyOptions certify;
  CapacityOptions capacity;
};

/// Defaults overridden by any keys present in `config`.
ExperimentSettings settings_from_config(const Config& config);

enum class Family { m7, general };
Family parse_family(const std::string& name);

/// m7 needs p in [0, 1]; general needs d >= 3. Throws DomainError otherwise.
ChannelMatrix build_family_matrix(Family family, std::optional<double> p,
                                  std::optional<std::size_t> d);

enum class HintMode { automatic, none };
HintMode parse_hint_mode(const std::string& name);

/// Factorizations of the constructed families whose closed form equals m,
/// found by matching m against matrix_m7(m(5,5)) and matrix_general(d).
std::vector<PsdFactorization> family_hints(const ChannelMatrix& m);

/// Simulation of the n7 (p, optional rotation) or general (d) protocol
/// against its closed form, through every assistance embedding.
ExperimentReport run_simulate(Family channel, std::optional<double> p,
                              std::optional<std::size_t> d,
                              std::optional<std::uint64_t> rotation_seed,
                              const ExperimentSettings& s);

/// Row-stochasticity check, then the rank certificate with its method trace.
ExperimentReport run_certify(const ChannelMatrix& m, HintMode hints,
                             const ExperimentSettings& s);

/// Trace fidelity; with `dim` also compares against the d-level bound.
ExperimentReport run_fidelity(const ChannelMatrix& m, std::optional<std::size_t> dim,
                              const ExperimentSettings& s);

/// Blahut-Arimoto capacity, optionally restricted to the rows in `mask`.
ExperimentReport run_capacity(const ChannelMatrix& m, const std::vector<std::size_t>& mask,
                              const ExperimentSettings& s);

/// `count` seeded random PR-assisted strategies over the 7-input channel.
ExperimentReport run_pr_sample(std::size_t count, const ExperimentSettings& s);

/// Every acceptance check, one report per group. With `input`, an extra
/// report checks that the supplied matrix is a valid M7 channel matrix.
std::vector<ExperimentReport> run_paper_suite(const ExperimentSettings& s,
                                              const std::optional<ChannelMatrix>& input =
                                                  std::nullopt);

nlohmann::json certificate_to_json(const RankCertificate& cert);
nlohmann::json bound_trace_to_json(const BoundNode& node);

}  // namespace esl
