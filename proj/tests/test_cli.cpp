// Copyright 2026 The tetra Authors
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


#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <string>

#include <sys/wait.h>

#include "test_util.hpp"

#ifndef TETRA_CLI_PATH
#error "TETRA_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TETRA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct Case {
  const char* args;
  int code;
};

}  // namespace

TEST_CASE("exit codes") {
  const Case cases[] = {
      {"build --n 2 --m 2 --poly 'z1 z2'", 0},
      {"verify --n 3 --poly 'z1 z3 + z1 z2 z3'", 0},
      {"verify --n 2 --poly '2 z1 z2'", 1},
      {"level --n 2 --poly 'z1 z2'", 0},
      {"witness --n 3 --poly 'z1 z3 + z1 z2 z3' --target '2 z1 z3 + z1 z2 z3'", 1},
      {"witness --n 3 --poly 'z1 z3 + z1 z2 z3' --target '2 z1 z3 + z1 z2 z3' --allow-conjugation", 0},
      {"reproduce appC", 0},
      {"reproduce appB", 1},
      {"", 2},
      {"frobnicate", 2},
      {"build --n 2 --unknown-flag", 2},
      {"build --n 2", 2},
      {"build --n 2 --poly 'z1 +* z2'", 2},
      {"build --n 2 --poly 'z1 z3'", 2},
      {"build --n 2 --poly '3'", 2},
      {"build --n 1 --poly 'z1'", 2},
      {"build --n 9 --poly 'z1 z2'", 2},
      {"build --n two --poly 'z1 z2'", 2},
      {"build --n 2 --m 0 --poly 'z1 z2'", 2},
      {"build --n 2 --poly 'z1 z2' --format yaml", 2},
      {"build --n 2 --poly 'z1 z2' --format csv", 2},
      {"level --n 2 --poly 'z1 z2' --mode fast", 2},
      {"level --n 2 --poly 'z1 z2' --cap 9", 2},
      {"search --n 3 --filter round", 2},
      {"search --n 5", 2},
      {"witness --n 2 --poly 'z1 z2'", 2},
      {"reproduce table9", 2},
      {"--config /nonexistent/tetra.ini build --n 2 --poly 'z1 z2'", 2},
  };
  for (const auto& c : cases) CHECK_MESSAGE(run(c.args).code == c.code, c.args);
}

TEST_CASE("build JSON for the two-qubit fiducial") {
  const auto r = run("build --n 2 --m 2 --poly 'z1 z2' --format json");
  REQUIRE(r.code == 0);
  const auto j = tetra::Json::parse(r.out);
  CHECK(j["fiducial"][0][0] == 0.707106781187);
  CHECK(j["fiducial"][2][1] == 0.353553390593);
  CHECK(j["columns"].size() == 4);
}

TEST_CASE("level of a three-qubit measurement") {
  const auto r = run("level --n 3 --m 2 --poly '2 z1 z3 + z1 z2 z3'");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("4\n", 0) == 0);
}

TEST_CASE("search output is byte-identical across thread counts") {
  const auto a = run("search --n 3 --format csv --jobs 1");
  const auto b = run("search --n 3 --format csv --jobs 4");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("poly,level,r,tangle,c2_1,c2_2,c2_3,stab,chirality,conjugate_key\n", 0) == 0);
  const auto c = run("classify --n 3 --format json --jobs 1");
  const auto d = run("classify --n 3 --format json --jobs 3");
  CHECK(c.out == d.out);
}

TEST_CASE("two-qubit search with both filters") {
  const auto r = run("search --n 2 --filter regular,nonzero --format csv");
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "poly,level,r,tangle,c2_1,c2_2,c2_3,stab,chirality,conjugate_key\n"
        "z1 z2,3,0.866025403784,,0.25,,,1,-1,3 z1 z2\n"
        "3 z1 z2,3,0.866025403784,,0.25,,,1,-1,z1 z2\n");
}

TEST_CASE("config file values yield to flags") {
  const std::string path = "tetra_cli_test.ini";
  {
    std::ofstream os(path);
    os << "n=3\nformat=csv\n";
  }
  const auto a = run("--config " + path + " search");
  CHECK(a.code == 0);
  CHECK(a.out.rfind("poly,", 0) == 0);
  const auto b = run("--config " + path + " search --format text");
  CHECK(b.out.rfind("256 candidates, 40 hits", 0) == 0);
  std::remove(path.c_str());
}
