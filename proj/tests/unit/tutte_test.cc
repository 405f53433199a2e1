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

#include <random>

#include "doctest.h"
#include "homtutte/complexes.h"
#include "homtutte/tutte.h"
#include "oracles/frozen.h"
#include "oracles/oracle.h"
#include "support.h"

using homtutte::Engine;
using homtutte::MultiPoly;
using homtutte::Rational;
using homtutte::SweepOptions;
using testing_support::to_poly2;

namespace {

SweepOptions reference() {
  SweepOptions o;
  o.engine = Engine::kReference;
  return o;
}

SweepOptions jobs(int j) {
  SweepOptions o;
  o.jobs = j;
  return o;
}

}  // namespace

TEST_CASE("small Tutte polynomials match the frozen brute force") {
  auto triangle = testing_support::load("triangle.json").chain;
  MultiPoly t = homtutte::tutte_homological(triangle, 1);
  CHECK(to_poly2(t) == frozen::kTriangleJ1);
  CHECK(t.canonical_string() == "X^2 + 3X + 3 + Y");

  auto bd3 = testing_support::load("bd3simplex.json").chain;
  CHECK(to_poly2(homtutte::tutte_homological(bd3, 1)) == frozen::kBd3J1);

  auto bd4 = testing_support::load("bd4simplex.json").chain;
  CHECK(to_poly2(homtutte::tutte_homological(bd4, 1)) == frozen::kBd4J1);
  CHECK(to_poly2(homtutte::tutte_homological(bd4, 2)) == oracle::swap(frozen::kBd4J1));
}

TEST_CASE("the 2^20-subset sum over the 4-sphere matches the frozen brute force") {
  auto bd5 = testing_support::load("bd5simplex.json").chain;
  MultiPoly t = homtutte::tutte_homological(bd5, 2);
  CHECK(to_poly2(t) == frozen::kBd5J2);
  const Rational one[] = {1, 1};
  CHECK(t.evaluate(one) == Rational(1 << 20));
}

TEST_CASE("property: sweep and reference engines agree with the modular oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    auto facets = oracle::random_two_complex(rng, 6, 9);
    auto c = homtutte::chain_complex(homtutte::SimplicialComplex::from_facets(facets));
    for (int j = 1; j <= c.top_dimension(); ++j) {
      if (c.cell_count(j) > 14) continue;
      MultiPoly fast = homtutte::tutte_homological(c, j);
      CHECK(fast == homtutte::tutte_homological(c, j, reference()));
      CHECK(to_poly2(fast) == oracle::tutte_from_facets(facets, j));
    }
  }
}

TEST_CASE("property: T(1,1) counts all subsets and the extreme terms are X^rank and Y^nullity") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    auto facets = oracle::random_two_complex(rng, 7, 10);
    auto c = homtutte::chain_complex(homtutte::SimplicialComplex::from_facets(facets));
    for (int j = 1; j <= c.top_dimension(); ++j) {
      MultiPoly t = homtutte::tutte_homological(c, j);
      const int m = c.cell_count(j);
      const Rational one[] = {1, 1};
      CHECK(t.evaluate(one) == Rational(std::int64_t{1} << m));
      const int rank = oracle::rank_mod_p(oracle::boundary(facets, j));
      CHECK(t.coefficient({rank, 0}) == 1);      // empty selection
      CHECK(t.coefficient({0, m - rank}) == 1);  // everything selected
    }
  }
}

TEST_CASE("graph Tutte polynomials against deletion-contraction") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    homtutte::GraphView g;
    g.vertices = 2 + static_cast<int>(rng() % 5);
    const int edges = static_cast<int>(rng() % 9);
    for (int e = 0; e < edges; ++e) {
      g.edges.emplace_back(static_cast<int>(rng() % g.vertices), static_cast<int>(rng() % g.vertices));
    }
    oracle::Poly2 expected = oracle::tutte_deletion_contraction(g.vertices, g.edges);
    CHECK(to_poly2(homtutte::tutte_graph(g)) == expected);
    // The graph's 1-dimensional cell complex yields the same state sum.
    CHECK(to_poly2(homtutte::tutte_homological(homtutte::graph_chain_complex(g), 1)) == expected);
  }
}

TEST_CASE("spanning-tree evaluation equals an independent tree count") {
  std::vector<std::pair<int, int>> k4;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) k4.emplace_back(a, b);
  }
  const Rational zero[] = {0, 0};
  auto bd3 = testing_support::load("bd3simplex.json").chain;
  CHECK(homtutte::tutte_homological(bd3, 1).evaluate(zero) == oracle::count_spanning_trees(4, k4));
  CHECK(oracle::count_spanning_trees(4, k4) == 16);
  auto triangle = testing_support::load("triangle.json").chain;
  CHECK(homtutte::tutte_homological(triangle, 1).evaluate(zero) ==
        oracle::count_spanning_trees(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("results are independent of the worker count") {
  auto c = testing_support::load("bd4simplex.json").chain;
  for (int j = 1; j <= 3; ++j) {
    MultiPoly one = homtutte::tutte_homological(c, j, jobs(1));
    CHECK(one == homtutte::tutte_homological(c, j, jobs(3)));
    CHECK(one == homtutte::tutte_homological(c, j, jobs(8)));
  }
}

TEST_CASE("cap and dimension errors") {
  auto bd5 = testing_support::load("bd5simplex.json").chain;
  SweepOptions small;
  small.cap_log2 = 16;
  CHECK_THROWS_AS(homtutte::tutte_homological(bd5, 2, small), homtutte::CapExceededError);
  CHECK_THROWS_AS(homtutte::tutte_homological(bd5, 0), std::out_of_range);
  CHECK_THROWS_AS(homtutte::tutte_homological(bd5, 5), std::out_of_range);
}
