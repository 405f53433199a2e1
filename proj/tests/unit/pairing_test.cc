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

#include "doctest.h"
#include "homtutte/exactlin.h"
#include "homtutte/pairing.h"
#include "support.h"

using homtutte::EmbeddingDatum;
using homtutte::SimplicialComplex;
using homtutte::SparseMatrix;

namespace {

homtutte::Rational det2(const SparseMatrix& q) { return q.at(0, 0) * q.at(1, 1) - q.at(0, 1) * q.at(1, 0); }

}  // namespace

TEST_CASE("torus: rank 2 unimodular antisymmetric form") {
  auto k = SimplicialComplex::from_facets(testing_support::torus7_facets());
  EmbeddingDatum e = homtutte::build_embedding(k, 1);
  REQUIRE(e.r() == 2);
  CHECK(e.form.transpose() == e.form.negated());
  CHECK(det2(e.form).abs() == 1);
  // Reversing the orientation negates the form.
  EmbeddingDatum flipped = homtutte::build_embedding(k, 1, true);
  CHECK(flipped.form == e.form.negated());
}

TEST_CASE("Kronecker-dual cocycles") {
  auto k = SimplicialComplex::from_facets(testing_support::torus7_facets());
  auto c = homtutte::chain_complex(k);
  SparseMatrix cycles = homtutte::homology_basis(c, 1);
  REQUIRE(cycles.cols() == 2);
  auto cob = homtutte::cohomology_basis(c, 1, cycles);
  CHECK(cob.evaluation == SparseMatrix::identity(2));
  // Cocycles: delta beta = 0.
  CHECK((c.boundary(2).transpose() * cob.cocycles).is_zero());
  // Psi is a left inverse of R that kills boundaries.
  SparseMatrix psi = homtutte::homology_projection(c, 1, cycles);
  CHECK(psi * cycles == SparseMatrix::identity(2));
  CHECK((psi * c.boundary(2)).is_zero());
}

TEST_CASE("product of two 2-spheres: even indefinite form of signature zero") {
  auto k = SimplicialComplex::from_facets(testing_support::sphere_product_facets());
  REQUIRE(k.dimension() == 4);
  CHECK(homtutte::betti_numbers(homtutte::chain_complex(k)) == std::vector<int>{1, 0, 2, 0, 1});
  EmbeddingDatum e = homtutte::build_embedding(k, 2);
  REQUIRE(e.r() == 2);
  CHECK(e.form.transpose() == e.form);
  CHECK(homtutte::congruence_signature(e.form) == homtutte::Signature{1, 1, 0});
  CHECK(det2(e.form) < 0);
}

TEST_CASE("spheres and non-orientable surfaces") {
  auto bd5 = SimplicialComplex::from_facets(testing_support::boundary_facets(5));
  EmbeddingDatum e = homtutte::build_embedding(bd5, 2);
  CHECK(e.r() == 0);
  CHECK(e.class_map.rows() == 0);
  CHECK(e.class_map.cols() == 20);
  CHECK_THROWS_AS(homtutte::build_embedding(testing_support::load("klein.json").simplicial.value(), 1),
                  homtutte::NotOrientableError);
  CHECK_THROWS_AS(homtutte::build_embedding(testing_support::load("rp2.json").simplicial.value(), 1),
                  homtutte::NotOrientableError);
  CHECK_THROWS_AS(homtutte::build_embedding(bd5, 1), std::invalid_argument);
}

TEST_CASE("cup product of a cocycle with itself vanishes for odd degree") {
  auto k = SimplicialComplex::from_facets(testing_support::torus7_facets());
  auto c = homtutte::chain_complex(k);
  auto cob = homtutte::cohomology_basis(c, 1, homtutte::homology_basis(c, 1));
  auto mu = homtutte::fundamental_cycle(c);
  SparseMatrix g = homtutte::cup_matrix(k, cob.cocycles, mu);
  CHECK(g.at(0, 0) == 0);
  CHECK(g.at(1, 1) == 0);
  CHECK(g.at(0, 1) == -g.at(1, 0));
}
