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

// Drives the esl executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "esl/constructions.hpp"
#include "esl/report/matrix_io.hpp"
#include "json.hpp"

namespace esl {
namespace {

namespace fs = std::filesystem;

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "esl_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" ESL_CLI_PATH "\" " + args + " > \"" +
                          (work_dir() / "stdout.txt").string() + "\" 2> \"" +
                          (work_dir() / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const std::string& name) { return "\"" + (work_dir() / name).string() + "\""; }

TEST(Cli, BuildMatrixRoundTrip) {
  ASSERT_EQ(run("build-matrix --family m7 --p 1 --out " + path("m7.json")), 0);
  const ChannelMatrix m = load_matrix(work_dir() / "m7.json");
  EXPECT_EQ(m, matrix_m7(1.0));
  EXPECT_EQ(m(6, 5), 1.0 / 3.0);
  ASSERT_EQ(run("build-matrix --family general --d 3 --format csv --out " + path("g3.csv")), 0);
  EXPECT_EQ(load_matrix(work_dir() / "g3.csv"), matrix_general(3));
  ASSERT_EQ(run("build-matrix --family general --d 3 --format csv --header --out " +
                path("g3h.csv")),
            0);
  EXPECT_EQ(read_text_file(work_dir() / "g3h.csv").substr(0, 3), "y1,");
  EXPECT_EQ(load_matrix(work_dir() / "g3h.csv"), matrix_general(3));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("build-matrix --family m7 --out " + path("x.json")), 2);
  EXPECT_EQ(run("build-matrix --family m7 --p 2 --out " + path("x.json")), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("certify --matrix " + path("does-not-exist.json")), 3);
  write_text_file(work_dir() / "broken.json", "{\"rows\": 2");
  EXPECT_EQ(run("certify --matrix " + path("broken.json")), 3);
  EXPECT_EQ(run("build-matrix --family m7 --p 0.5 --out /proc/esl/no.json"), 3);
  EXPECT_EQ(run("--help"), 0);
}

TEST(Cli, SimulateAndCertify) {
  EXPECT_EQ(run("simulate --channel n7 --p 0.5 --out " + path("sim.json")), 0);
  EXPECT_EQ(run("simulate --channel n7 --p 0.5 --rotation-seed 9"), 0);
  EXPECT_EQ(run("simulate --channel general --d 4"), 0);
  ASSERT_EQ(run("build-matrix --family m7 --p 0.3 --out " + path("m03.json")), 0);
  ASSERT_EQ(run("certify --matrix " + path("m03.json") + " --out " + path("cert.json")), 0);
  const auto j = nlohmann::json::parse(read_text_file(work_dir() / "cert.json"));
  EXPECT_EQ(j["results"]["certificate"]["lower_bound"], 7);
  EXPECT_EQ(j["results"]["certificate"]["upper_bound"], 7);
  EXPECT_TRUE(j["results"]["certificate"].contains("lower_method"));
}

TEST(Cli, CapacityFidelityPrSample) {
  EXPECT_EQ(run("capacity --family m7 --p 1 --mask 1-6 --out " + path("cap.json")), 0);
  const auto j = nlohmann::json::parse(read_text_file(work_dir() / "cap.json"));
  EXPECT_NEAR(j["results"]["capacity_bits"]["value"].get<double>(), std::log2(6.0), 1e-9);
  EXPECT_EQ(run("fidelity --family m7 --p 1 --dim 6"), 0);
  EXPECT_EQ(run("fidelity --family m7 --p 0 --dim 6"), 1);
  EXPECT_EQ(run("capacity --family m7 --p 1 --mask 0"), 2);
  EXPECT_EQ(run("pr-sample --count 50 --seed 3"), 0);
}

TEST(Cli, TamperedMatrixFailsChecks) {
  ChannelMatrix m = matrix_m7(1.0);
  for (std::size_t j = 0; j < 7; ++j) m(5, j) *= 0.9;  // row 6
  save_matrix(work_dir() / "tampered.json", m, MatrixFormat::json);
  EXPECT_EQ(run("certify --matrix " + path("tampered.json")), 1);
  EXPECT_EQ(run("paper-suite --matrix " + path("tampered.json") + " --out " + path("tamper")),
            1);
  const auto r = nlohmann::json::parse(read_text_file(work_dir() / "tamper" / "input-matrix.json"));
  EXPECT_FALSE(r["pass"].get<bool>());
}

TEST(Cli, FullSuiteIsByteStable) {
  ASSERT_EQ(run("paper-suite --seed 11 --out " + path("run1")), 0);
  ASSERT_EQ(run("paper-suite --seed 11 --parallel --out " + path("run2")), 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(work_dir() / "run1")) {
    ++files;
    const auto other = work_dir() / "run2" / e.path().filename();
    ASSERT_TRUE(fs::exists(other)) << other;
    EXPECT_EQ(read_text_file(e.path()), read_text_file(other)) << e.path().filename();
  }
  EXPECT_GE(files, 12u);
}

TEST(Cli, ConfigFileAndFlagPrecedence) {
  write_text_file(work_dir() / "esl.conf", "solver.seed = 5\ncapacity.tol = 1e-6\n");
  const std::string env = "ESL_CONFIG=" + path("esl.conf");
  ASSERT_EQ(run("capacity --family m7 --p 1 --out " + path("cfg1.json"), env), 0);
  auto j = nlohmann::json::parse(read_text_file(work_dir() / "cfg1.json"));
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["parameters"]["tol"], 1e-6);
  ASSERT_EQ(run("capacity --family m7 --p 1 --seed 8 --tol 1e-9 --out " + path("cfg2.json"), env),
            0);
  j = nlohmann::json::parse(read_text_file(work_dir() / "cfg2.json"));
  EXPECT_EQ(j["seed"], 8);
  EXPECT_EQ(j["parameters"]["tol"], 1e-9);
  write_text_file(work_dir() / "bad.conf", "nonsense = 1\n");
  EXPECT_EQ(run("capacity --family m7 --p 1", "ESL_CONFIG=" + path("bad.conf")), 3);
}

}  // namespace
}  // namespace esl
