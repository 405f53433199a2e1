// Copyright 2026 The Authors.
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

#include <string>

#include "doctest.h"
#include "homtutte/io.h"
#include "homtutte/pairing.h"
#include "homtutte/verify.h"
#include "support.h"

using homtutte::ParseError;
using homtutte::Schema;

namespace {

std::string error_of(const std::string& text) {
  try {
    homtutte::parse_input(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("schema detection") {
  CHECK(homtutte::parse_input(R"({"facets": [[0, 1], [1, 2]]})").schema == Schema::kSimplicial);
  CHECK(homtutte::parse_input(R"({"dims": [1, 0], "boundaries": [{"rows": 1, "cols": 0, "entries": []}]})").schema ==
        Schema::kChain);
  CHECK(testing_support::load("cp2-embedding.json").schema == Schema::kEmbedding);
}

TEST_CASE("parse errors name the problem") {
  CHECK(error_of("{") .find("invalid JSON") != std::string::npos);
  CHECK(error_of("[]").find("JSON object") != std::string::npos);
  CHECK(error_of(R"({"x": 1})").find("unrecognized") != std::string::npos);
  CHECK(error_of(R"({"facets": [[0, 0]]})").find("simplicial") != std::string::npos);
  CHECK(error_of(R"({"dims": [1, 1], "boundaries": [{"rows": 1, "cols": 1, "entries": [[0, 3, "1"]]}]})")
            .find("out of range") != std::string::npos);
  CHECK(error_of(R"({"dims": [1, 1], "boundaries": [{"rows": 1, "cols": 1, "entries": [[0, 0, "x"]]}]})")
            .find("D_1") != std::string::npos);
  CHECK(error_of(R"({"dims": [1, 1], "boundaries": [{"rows": 1, "cols": 1}]})").find("entries") != std::string::npos);
  // A datum whose Q is not antisymmetric for odd n.
  CHECK(error_of(R"({"n": 1, "r": 1, "Q": {"rows": 1, "cols": 1, "entries": [[0, 0, "1"]]},
                     "Psi": {"rows": 1, "cols": 1, "entries": [[0, 0, "1"]]},
                     "R": {"rows": 1, "cols": 1, "entries": [[0, 0, "1"]]},
                     "complex": {"dims": [1, 1, 1], "boundaries": [{"rows": 1, "cols": 1, "entries": []},
                                                                   {"rows": 1, "cols": 1, "entries": []}]}})")
            .find("antisymmetric") != std::string::npos);
}

TEST_CASE("serialization round trips and is deterministic") {
  auto in = testing_support::load("torus7.json");
  auto e = homtutte::build_embedding(*in.simplicial, 1);
  const std::string once = homtutte::embedding_to_json(e).dump();
  auto back = homtutte::embedding_from_json(nlohmann::json::parse(once));
  CHECK(homtutte::embedding_to_json(back).dump() == once);
  CHECK(back.form == e.form);
  CHECK(back.complex == e.complex);

  const std::string chain = homtutte::chain_to_json(in.chain).dump();
  CHECK(homtutte::chain_to_json(homtutte::chain_from_json(nlohmann::json::parse(chain))).dump() == chain);
  // Dualizing twice is the identity on serialized chain complexes.
  auto twice = homtutte::algebraic_dual(homtutte::algebraic_dual(in.chain));
  CHECK(homtutte::chain_to_json(twice).dump() == chain);

  // Rational entries survive as canonical strings.
  auto m = homtutte::matrix_from_json(nlohmann::json::parse(R"({"rows": 1, "cols": 2, "entries": [[0, 1, "-6/4"], [0, 0, 2]]})"),
                                      "m");
  CHECK(homtutte::matrix_to_json(m).dump() == R"({"rows":1,"cols":2,"entries":[[0,0,"2"],[0,1,"-3/2"]]})");
}

TEST_CASE("polynomial JSON") {
  auto p = homtutte::poly_P(*testing_support::load("s2xs2-embedding.json").embedding);
  CHECK(homtutte::poly_to_json(p).dump() ==
        R"({"vars":["X","Y","A","B"],"terms":[{"exp":[0,0,2,0],"coef":"1"},{"exp":[0,0,0,0],"coef":"2"},)"
        R"({"exp":[0,0,0,2],"coef":"1"}],"canonical":"A^2 + 2 + B^2"})");
}

TEST_CASE("input digest is FNV-1a 64") {
  CHECK(homtutte::fnv1a64_hex("") == "cbf29ce484222325");
  CHECK(homtutte::fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("verification suites pass on the fixtures") {
  auto bd3 = testing_support::load("bd3simplex.json").chain;
  CHECK(homtutte::verify_sphere_t(bd3).passed());
  CHECK(homtutte::verify_matroid(bd3).passed());
  for (const char* name : {"cp2-embedding.json", "s2xs2-embedding.json", "torus-2loop-embedding.json"}) {
    auto e = *testing_support::load(name).embedding;
    CHECK(homtutte::verify_p_duality(e).passed());
    CHECK(homtutte::verify_identities(e).passed());
    CHECK(homtutte::verify_specialize(e).passed());
  }
}

TEST_CASE("sphere duality fails on a non-sphere and says why") {
  // The torus is not a homology sphere, and the law fails there.
  auto torus = testing_support::load("torus7.json").chain;
  auto report = homtutte::verify_sphere_t(torus);
  CHECK_FALSE(report.passed());
  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].detail.find("lhs = ") != std::string::npos);
  CHECK(homtutte::mask_string(0b101, 4) == "0b0101");
}
