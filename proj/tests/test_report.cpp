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


#include <sstream>

#include "test_util.hpp"

using namespace tetra;
using namespace tetra::testing;

TEST_CASE("twelve-digit rounding") {
  CHECK(round12(1.0 / 3) == 0.333333333333);
  CHECK(format12(kSqrt3 / 2) == "0.866025403784");
  CHECK(format12(-1e-17) == "-1e-17");
  CHECK(round12(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(round12(-0.0)));
}

TEST_CASE("basis JSON layout") {
  const Basis b = basis_from_polynomial(parse_polynomial("z1 z2", 2, 2));
  const Json j = to_json(b);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "polynomial", "m", "fiducial", "columns", "actions"});
  CHECK(j["n"] == 2);
  CHECK(j["polynomial"] == "z1 z2");
  CHECK(j["fiducial"][1][0] == 0.353553390593);
  CHECK(j["fiducial"][1][1] == -0.353553390593);
  CHECK(j["columns"].size() == 4);
  CHECK(j["actions"][3] == "-YY");
  CHECK(to_json(b).dump() == j.dump());
}

TEST_CASE("CSV rows") {
  SearchConfig cfg;
  cfg.n = 2;
  const auto hits = search_regular(cfg).hits;
  std::ostringstream os;
  write_csv(os, hits);
  CHECK(os.str() ==
        "poly,level,r,tangle,c2_1,c2_2,c2_3,stab,chirality,conjugate_key\n"
        "z1 z2,3,0.866025403784,,0.25,,,1,-1,3 z1 z2\n"
        "3 z1 z2,3,0.866025403784,,0.25,,,1,-1,z1 z2\n");

  cfg.n = 3;
  cfg.polynomials = {parse_polynomial("z1 z3 + 3 z2 z3 + z1 z2 z3", 3, 2)};
  const auto row = csv_row(search_regular(cfg).hits.at(0));
  CHECK(row ==
        "z1 z3 + 3 z2 z3 + z1 z2 z3,4,0.433012701892,0.503891109269,0.154304445366,0.154304445366,"
        "0.154304445366,6,+1;+1;+1,3 z1 z3 + z2 z3 + 3 z1 z2 z3");
}

TEST_CASE("chirality text") {
  CHECK(chirality_text({1, -1, 0}) == "+1;-1;0");
  CHECK(chirality_text({}) == "");
}

TEST_CASE("class JSON is deterministic") {
  SearchConfig cfg;
  cfg.n = 3;
  const auto a = to_json(group_into_classes(search_regular(cfg).hits)).dump(2);
  cfg.jobs = 3;
  const auto b = to_json(group_into_classes(search_regular(cfg).hits)).dump(2);
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["class_count"] == 8);
  CHECK(j["merged_count"] == 4);
}

TEST_CASE("level JSON carries mode and cap") {
  const Json j = to_json(clifford_level_test(gates::T(), 2, LevelMode::generator));
  CHECK(j["level"] == "exceeds_cap");
  CHECK(j["cap"] == 2);
  CHECK(j["mode"] == "generator");
}
