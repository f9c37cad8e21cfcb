// Copyright 2026 The qembed authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  std::string command = std::string(QEMBED_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
    result.stdout_text.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/qembed_cli_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("embed reports the quantum dimension") {
  std::string model = write_temp("spin4.json", R"({"type":"spin","d":4})");
  RunResult r = run_cli("embed " + model);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("n = 4") != std::string::npos);
}

TEST_CASE("embed --json emits the embedding record") {
  std::string model = write_temp("spin2.json", R"({"type":"spin","d":2})");
  RunResult r = run_cli("embed " + model + " --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["n"] == 2);
  CHECK(j["model"]["type"] == "spin");
  CHECK(j["phi"].size() == 4);  // row-major rows of the 4 x 3 map
}

TEST_CASE("verify passes on a catalog model and fails exit-code free") {
  std::string model = write_temp("c3.json", R"({"type":"classical","n":3})");
  RunResult r = run_cli("verify " + model + " --trials 40");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("overall: PASS") != std::string::npos);
}

TEST_CASE("decide: simplex exits 0, gbit exits 1") {
  std::string simplex = write_temp(
      "simplex.json",
      R"({"type":"polyhedral","dim":3,"unit":[1,1,1],"extreme_effects":[[1,0,0],[0,1,0],[0,0,1]]})");
  RunResult rs = run_cli("decide " + simplex + " --json");
  CHECK(rs.exit_code == 0);
  CHECK(nlohmann::json::parse(rs.stdout_text)["verdict"] == "classical_isomorphic");

  std::string gbit = write_temp(
      "gbit.json",
      R"({"type":"polyhedral","dim":3,"unit":[1,0,0],"extreme_effects":[[0.5,0.5,0],[0.5,-0.5,0],[0.5,0,0.5],[0.5,0,-0.5]]})");
  RunResult rg = run_cli("decide " + gbit + " --json");
  CHECK(rg.exit_code == 1);
  CHECK(nlohmann::json::parse(rg.stdout_text)["verdict"] == "not_quantum_embeddable");
}

TEST_CASE("classify reports the negative Choi witness for real quantum theory") {
  std::string model = write_temp("qr2.json", R"({"type":"quantum","field":"real","n":2})");
  RunResult r = run_cli("classify " + model + " --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["verdict"] == "not_physical");
  CHECK(j["min_choi_eigenvalue"].get<double>() == doctest::Approx(-0.5));
}

TEST_CASE("choi prints the spectrum") {
  std::string model = write_temp("c2.json", R"({"type":"classical","n":2})");
  RunResult r = run_cli("choi " + model + " --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["completely_positive"] == true);
  CHECK(j["spectrum"].size() == 4);
}

TEST_CASE("demo runs the gbit certificate end to end") {
  RunResult r = run_cli("demo --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["certificate"]["ranks"]["state_space"] == 2);
  CHECK(j["certificate"]["ranks"]["classical_targets"] == 3);
  CHECK(j["decision"]["verdict"] == "not_quantum_embeddable");
}

TEST_CASE("usage and parse errors exit 2 with a line-numbered message") {
  RunResult nofile = run_cli("embed /tmp/qembed_cli_missing_file.json");
  CHECK(nofile.exit_code == 2);

  std::string broken = write_temp("broken.json", "{\n  \"type\": \"spin\",\n  \"d\": oops\n}");
  RunResult parse = run_cli("verify " + broken);
  CHECK(parse.exit_code == 2);

  std::string schema = write_temp("schema.json", R"({"type":"spin"})");
  RunResult bad_schema = run_cli("verify " + schema);
  CHECK(bad_schema.exit_code == 2);

  // embed on a polyhedral model is a usage error pointing at decide
  std::string gbit = write_temp(
      "gbit2.json",
      R"({"type":"polyhedral","dim":3,"unit":[1,0,0],"extreme_effects":[[0.5,0.5,0],[0.5,-0.5,0],[0.5,0,0.5],[0.5,0,-0.5]]})");
  RunResult embed_poly = run_cli("embed " + gbit);
  CHECK(embed_poly.exit_code == 2);

  // and decide on a catalog model is a usage error as well
  std::string classical = write_temp("c4.json", R"({"type":"classical","n":4})");
  RunResult decide_catalog = run_cli("decide " + classical);
  CHECK(decide_catalog.exit_code == 2);

  RunResult no_args = run_cli("");
  CHECK(no_args.exit_code == 2);
}

TEST_CASE("reduce reports the built and minimal dimensions") {
  std::string model = write_temp("qh1.json", R"({"type":"quantum","field":"quaternion","n":1})");
  RunResult r = run_cli("reduce " + model + " --json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.stdout_text);
  CHECK(j["n"] == 2);  // embedded barycenter is full rank, so 2n = 2 is kept
}

TEST_CASE("identical configuration and seed give byte-identical JSON output") {
  std::string model = write_temp("det.json", R"({"type":"spin","d":3})");
  RunResult first = run_cli("verify " + model + " --trials 25 --seed 11 --json");
  RunResult second = run_cli("verify " + model + " --trials 25 --seed 11 --json");
  CHECK(first.exit_code == 0);
  CHECK(first.stdout_text == second.stdout_text);
  CHECK(!first.stdout_text.empty());

  RunResult demo1 = run_cli("demo --json");
  RunResult demo2 = run_cli("demo --json");
  CHECK(demo1.stdout_text == demo2.stdout_text);
}

TEST_CASE("--out writes the JSON artifact to a file") {
  std::string model = write_temp("out.json", R"({"type":"classical","n":2})");
  std::string out_path = "/tmp/qembed_cli_artifact.json";
  std::remove(out_path.c_str());
  RunResult r = run_cli("embed " + model + " --out " + out_path);
  CHECK(r.exit_code == 0);
  std::ifstream in(out_path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j["n"] == 2);
}
