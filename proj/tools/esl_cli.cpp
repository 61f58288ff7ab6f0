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

// esl: command-line front end.
//
// Exit status: 0 success, 1 a check failed, 2 usage error, 3 I/O or format
// error.

#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esl/error.hpp"
#include "esl/report/config.hpp"
#include "esl/report/experiments.hpp"
#include "esl/report/matrix_io.hpp"
#include "esl/report/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Common {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> restarts;
  std::optional<double> tol;
  bool parallel = false;
  std::string out;
};

struct Source {
  std::string matrix;
  std::string family;
  std::optional<double> p;
  std::optional<std::size_t> d;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for every random choice");
  cmd->add_option("--restarts", c.restarts, "Solver restarts");
  cmd->add_option("--tol", c.tol, "Tolerance override for the command");
  cmd->add_flag("--parallel", c.parallel, "Run independent work concurrently");
  cmd->add_option("--out", c.out, "Output path (stdout when omitted)");
}

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("--matrix", s.matrix, "Matrix file (.json or .csv)");
  cmd->add_option("--family", s.family, "Built-in family: m7 or general");
  cmd->add_option("--p", s.p, "Parameter p of the m7 family")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--d", s.d, "Dimension d of the general family");
}

esl::ChannelMatrix load_source(const Source& s) {
  if (!s.matrix.empty() && !s.family.empty()) {
    throw esl::DomainError("give either --matrix or --family, not both");
  }
  if (!s.matrix.empty()) return esl::load_matrix(s.matrix);
  if (s.family.empty()) throw esl::DomainError("need --matrix or --family");
  return esl::build_family_matrix(esl::parse_family(s.family), s.p, s.d);
}

// "1-6", "1,3,5" or a mix; 1-based on the command line, 0-based out.
std::vector<std::size_t> parse_mask(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& t) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || v == 0) {
      throw esl::DomainError("bad mask entry '" + t + "'");
    }
    return v - 1;
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const std::size_t lo = number(item.substr(0, dash));
    const std::size_t hi = number(item.substr(dash + 1));
    if (hi < lo) throw esl::DomainError("bad mask range '" + item + "'");
    for (std::size_t i = lo; i <= hi; ++i) out.push_back(i);
  }
  if (out.empty()) throw esl::DomainError("empty mask");
  return out;
}

esl::ExperimentSettings settings_for(const Common& c) {
  esl::ExperimentSettings s = esl::settings_from_config(esl::Config::from_environment());
  if (c.seed) {
    s.seed = *c.seed;
    s.certify.solver.seed = *c.seed;
  }
  if (c.restarts) s.certify.solver.restarts = *c.restarts;
  if (c.parallel) {
    s.parallel = true;
    s.certify.solver.parallel = true;
  }
  return s;
}

int emit(const esl::ExperimentReport& r, const std::string& out) {
  if (out.empty()) {
    std::cout << r.dump();
  } else {
    esl::write_text_file(out, r.dump());
  }
  for (const auto& c : r.checks()) {
    if (!c.pass) std::cerr << "check failed: " << c.name << " (" << c.value << ")\n";
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Environment-assisted channel simulation and PSD-rank certification"};
  app.set_version_flag("--version", std::string(ESL_VERSION));
  app.require_subcommand(1);

  Common common;
  Source source;
  std::string format = "json";
  bool header = false;
  std::string channel = "n7";
  std::optional<std::uint64_t> rotation_seed;
  std::string hints = "auto";
  std::optional<std::size_t> dim;
  std::string mask;
  std::size_t count = 10000;

  auto* build = app.add_subcommand("build-matrix", "Write a constructed channel matrix");
  add_common(build, common);
  add_source(build, source);
  build->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  build->add_flag("--header", header, "Write a CSV header line");

  auto* simulate = app.add_subcommand("simulate", "Simulate an assisted protocol");
  add_common(simulate, common);
  simulate->add_option("--channel", channel, "n7 or general")
      ->check(CLI::IsMember({"n7", "general"}));
  simulate->add_option("--p", source.p, "Parameter p of the n7 strategy")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--d", source.d, "Dimension of the general channel");
  simulate->add_option("--rotation-seed", rotation_seed, "Haar rotation of the n7 basis");

  auto* cert = app.add_subcommand("certify", "Certify the PSD rank of a matrix");
  add_common(cert, common);
  add_source(cert, source);
  cert->add_option("--hints", hints, "auto or none")->check(CLI::IsMember({"auto", "none"}));

  auto* fidelity = app.add_subcommand("fidelity", "Trace fidelity of a square matrix");
  add_common(fidelity, common);
  add_source(fidelity, source);
  fidelity->add_option("--dim", dim, "Compare against the bound for this dimension");

  auto* cap = app.add_subcommand("capacity", "Blahut-Arimoto capacity");
  add_common(cap, common);
  add_source(cap, source);
  cap->add_option("--mask", mask, "Allowed input rows, 1-based, e.g. 1-6");

  auto* pr = app.add_subcommand("pr-sample", "Random PR-box strategies");
  add_common(pr, common);
  pr->add_option("--count", count, "Number of strategies")->check(CLI::PositiveNumber);

  auto* suite = app.add_subcommand("paper-suite", "Run every acceptance check");
  add_common(suite, common);
  suite->add_option("--matrix", source.matrix, "Also validate this M7 matrix file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    esl::ExperimentSettings s = settings_for(common);
    if (build->parsed()) {
      if (common.out.empty()) throw esl::DomainError("build-matrix needs --out");
      const esl::ChannelMatrix m = load_source(source);
      esl::save_matrix(common.out, m, esl::parse_matrix_format(format), header);
      return kExitOk;
    }
    if (simulate->parsed()) {
      if (common.tol) s.simulate_tol = *common.tol;
      return emit(esl::run_simulate(esl::parse_family(channel), source.p, source.d,
                                    rotation_seed, s),
                  common.out);
    }
    if (cert->parsed()) {
      if (common.tol) s.certify.witness_tol = *common.tol;
      return emit(esl::run_certify(load_source(source), esl::parse_hint_mode(hints), s),
                  common.out);
    }
    if (fidelity->parsed()) {
      return emit(esl::run_fidelity(load_source(source), dim, s), common.out);
    }
    if (cap->parsed()) {
      if (common.tol) s.capacity.tol = *common.tol;
      const std::vector<std::size_t> rows =
          mask.empty() ? std::vector<std::size_t>{} : parse_mask(mask);
      return emit(esl::run_capacity(load_source(source), rows, s), common.out);
    }
    if (pr->parsed()) return emit(esl::run_pr_sample(count, s), common.out);
    if (suite->parsed()) {
      if (common.tol) s.simulate_tol = *common.tol;
      std::optional<esl::ChannelMatrix> input;
      if (!source.matrix.empty()) input = esl::load_matrix(source.matrix);
      const auto reports = esl::run_paper_suite(s, input);
      const std::filesystem::path dir = common.out.empty() ? "." : common.out;
      bool ok = true;
      for (const auto& r : reports) {
        esl::write_text_file(dir / (r.id() + ".json"), r.dump());
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id() << "\n";
        for (const auto& c : r.checks()) {
          if (!c.pass) std::cout << "  failed: " << c.name << " (" << c.value << ")\n";
        }
        ok = ok && r.passed();
      }
      esl::write_text_file(dir / "summary.json", esl::summarize(reports).dump(2) + "\n");
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const esl::IoError& e) {
    std::cerr << "esl: " << e.what() << "\n";
    return kExitIo;
  } catch (const esl::FormatError& e) {
    std::cerr << "esl: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "esl: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
