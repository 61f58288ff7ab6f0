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

#include "esl/report/report.hpp"

#include <algorithm>
#include <cmath>

namespace esl {

ExperimentReport::ExperimentReport(std::string id, std::uint64_t seed)
    : id_(std::move(id)), seed_(seed) {}

void ExperimentReport::add_result(const std::string& name, double value, double tolerance) {
  results_[name] = {{"value", value}, {"tolerance", tolerance}};
}

void ExperimentReport::add_value(const std::string& name, nlohmann::json value) {
  results_[name] = std::move(value);
}

bool ExperimentReport::add(Check c) {
  checks_.push_back(std::move(c));
  return checks_.back().pass;
}

bool ExperimentReport::check_close(const std::string& name, double actual, double expected,
                                   double tol) {
  const double diff = std::abs(actual - expected);
  return add({name, diff <= tol, diff, tol, "|a-b| <="});
}

bool ExperimentReport::check_at_most(const std::string& name, double value, double limit) {
  return add({name, value <= limit, value, limit, "<="});
}

bool ExperimentReport::check_above(const std::string& name, double value, double limit) {
  return add({name, value > limit, value, limit, ">"});
}

bool ExperimentReport::check_equal(const std::string& name, long long value,
                                   long long expected) {
  return add({name, value == expected, static_cast<double>(value),
              static_cast<double>(expected), "=="});
}

bool ExperimentReport::check_true(const std::string& name, bool condition) {
  return add({name, condition, condition ? 1.0 : 0.0, 1.0, "=="});
}

bool ExperimentReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : checks_) {
    // NaN/inf are not valid JSON numbers.
    nlohmann::json value = std::isfinite(c.value) ? nlohmann::json(c.value)
                                                  : nlohmann::json(std::to_string(c.value));
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"value", std::move(value)},
                      {"tolerance", c.tolerance},
                      {"relation", c.relation}});
  }
  return {{"id", id_},
          {"version", ESL_VERSION},
          {"seed", seed_},
          {"parameters", parameters_},
          {"results", results_},
          {"artifacts", artifacts_},
          {"checks", std::move(checks)},
          {"notes", notes_},
          {"pass", passed()}};
}

std::string ExperimentReport::dump() const { return to_json().dump(2) + "\n"; }

nlohmann::json summarize(const std::vector<ExperimentReport>& reports) {
  nlohmann::json entries = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    std::size_t failed = 0;
    for (const auto& c : r.checks()) failed += c.pass ? 0 : 1;
    entries.push_back({{"id", r.id()}, {"pass", r.passed()}, {"failed_checks", failed},
                       {"checks", r.checks().size()}});
    all = all && r.passed();
  }
  return {{"version", ESL_VERSION}, {"reports", std::move(entries)}, {"pass", all}};
}

}  // namespace esl
