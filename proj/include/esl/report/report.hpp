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

// Machine-readable experiment reports. Keys are emitted in sorted order and
// no wall-clock data is recorded, so a report depends only on (version, seed,
// parameters).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace esl {

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string relation;  // how value was compared, e.g. "<=", "|a-b| <=", "=="
};

class ExperimentReport {
 public:
  ExperimentReport(std::string id, std::uint64_t seed);

  const std::string& id() const { return id_; }
  std::uint64_t seed() const { return seed_; }

  nlohmann::json& parameters() { return parameters_; }
  nlohmann::json& artifacts() { return artifacts_; }
  const std::vector<Check>& checks() const { return checks_; }

  /// Numeric results carry the tolerance they are meaningful to.
  void add_result(const std::string& name, double value, double tolerance);
  void add_value(const std::string& name, nlohmann::json value);
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  /// pass iff |actual - expected| <= tol.
  bool check_close(const std::string& name, double actual, double expected, double tol);
  /// pass iff value <= limit.
  bool check_at_most(const std::string& name, double value, double limit);
  /// pass iff value > limit.
  bool check_above(const std::string& name, double value, double limit);
  /// pass iff value == expected (integers).
  bool check_equal(const std::string& name, long long value, long long expected);
  bool check_true(const std::string& name, bool condition);

  bool passed() const;
  nlohmann::json to_json() const;
  /// Two-space indented JSON with a trailing newline.
  std::string dump() const;

 private:
  bool add(Check c);

  std::string id_;
  std::uint64_t seed_;
  nlohmann::json parameters_ = nlohmann::json::object();
  nlohmann::json results_ = nlohmann::json::object();
  nlohmann::json artifacts_ = nlohmann::json::object();
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

/// Bundle summary: one entry per report with its pass flag.
nlohmann::json summarize(const std::vector<ExperimentReport>& reports);

}  // namespace esl
