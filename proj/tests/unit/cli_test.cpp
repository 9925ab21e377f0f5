// Copyright 2026 The tss Authors
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

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "testing.hpp"

using tss::testing::TempDir;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(TSS_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("evaluate --data-dir /tmp --bogus").code == 1);
  CHECK(run("simplify --data-dir /no/such/dir --dataset X --instance 0").code == 2);
  TempDir dir("cli");
  CHECK(run("simplify --data-dir " + dir.path().string() + " --dataset X --instance 0").code == 2);
}

TEST_CASE("cli simplify prints json") {
  TempDir dir("cli");
  tss::testing::write_pulse_dataset(dir.path(), "Pulse", 24, 8, 8, 1);
  const auto r = run("simplify --data-dir " + dir.path().string() +
                     " --dataset Pulse --instance 0 --algorithm rdp --alpha-c 0.3");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["algorithm"] == "rdp");
  CHECK(j["n"] == 24);
  CHECK(run("simplify --data-dir " + dir.path().string() + " --dataset Pulse --instance 99").code == 2);
  CHECK(run("simplify --data-dir " + dir.path().string() + " --dataset Pulse --instance 0 --alpha-c 2").code == 1);
}

TEST_CASE("cli evaluate is byte-identical across worker counts") {
  TempDir dir("cli");
  tss::testing::write_pulse_dataset(dir.path() / "data", "Pulse", 24, 12, 20, 2);
  const std::string base = "evaluate --data-dir " + (dir.path() / "data").string() +
                           " --dataset Pulse --algorithm all --classifier knn --seed 42";
  REQUIRE(run(base + " --jobs 1 --out " + (dir.path() / "one").string()).code == 0);
  REQUIRE(run(base + " --jobs 8 --out " + (dir.path() / "eight").string()).code == 0);
  for (const char* f : {"curve_Pulse_os_knn.csv", "curve_Pulse_rdp_knn.csv", "curve_Pulse_bu_knn.csv",
                        "curve_Pulse_vw_knn.csv", "summary.csv", "table1.csv", "table3.csv", "table5.csv"}) {
    CAPTURE(f);
    const auto a = tss::testing::read_file(dir.path() / "one" / f);
    CHECK_FALSE(a.empty());
    CHECK(a == tss::testing::read_file(dir.path() / "eight" / f));
  }
}

TEST_CASE("cli data dir from the environment") {
  TempDir dir("cli");
  tss::testing::write_pulse_dataset(dir.path(), "Pulse", 24, 8, 8, 1);
  const auto r = run("characterize");  // no data dir anywhere
  CHECK(r.code == 1);
  const auto env = run("prototypes --dataset Pulse --k 1 --data-dir " + dir.path().string());
  CHECK(env.code == 0);
  CHECK(nlohmann::json::parse(env.out)["k"] == 1);
  ::setenv("TSS_DATA_DIR", dir.path().c_str(), 1);
  const auto via_env = run("prototypes --dataset Pulse --k 1");
  ::unsetenv("TSS_DATA_DIR");
  CHECK(via_env.code == 0);
  CHECK(via_env.out == env.out);
}
