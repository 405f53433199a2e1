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

#include <cstdint>
#include <limits>
#include <random>

#include "doctest.h"
#include "homtutte/exactlin.h"
#include "homtutte/rational.h"
#include "homtutte/sparse_matrix.h"
#include "oracles/oracle.h"

using homtutte::Rational;
using homtutte::SparseMatrix;
using homtutte::Vector;

namespace {

struct Pair {
  SparseMatrix exact;
  oracle::IntMatrix ints;
};

// Random integer matrix with small entries and a given density.
Pair random_matrix(std::mt19937_64& rng, int rows, int cols, int density_percent, int spread = 3) {
  std::vector<Vector> dense(rows, Vector(cols));
  oracle::IntMatrix ints(rows, std::vector<std::int64_t>(cols, 0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (static_cast<int>(rng() % 100) >= density_percent) continue;
      const std::int64_t v = static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread;
      dense[i][j] = v;
      ints[i][j] = v;
    }
  }
  return {SparseMatrix::from_dense(dense), ints};
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rational arithmetic stays exact across the int64 boundary") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational a(big);
  CHECK(a.is_small());
  Rational b = a + 1;
  CHECK_FALSE(b.is_small());
  CHECK(b.to_string() == "9223372036854775808");
  b -= 1;
  CHECK(b.is_small());
  CHECK(b == a);
  Rational min(std::numeric_limits<std::int64_t>::min());
  CHECK(min.to_string() == "-9223372036854775808");
  CHECK((-min).to_string() == "9223372036854775808");
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == 7);
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
}

TEST_CASE("property: rational operations agree with GMP on random operands") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    // Mix tiny and near-overflow magnitudes.
    auto draw = [&]() -> std::int64_t {
      std::int64_t v = static_cast<std::int64_t>(rng() >> (rng() % 2 ? 1 : 40));
      return (rng() % 2) ? v : -v;
    };
    std::int64_t an = draw(), ad = draw(), bn = draw(), bd = draw();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 1;
    Rational a(an, ad), b(bn, bd);
    mpq_class qa(mpz_class(static_cast<long>(an)), mpz_class(static_cast<long>(ad)));
    mpq_class qb(mpz_class(static_cast<long>(bn)), mpz_class(static_cast<long>(bd)));
    qa.canonicalize();
    qb.canonicalize();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
    CHECK(((a < b) == (qa < qb)));
  }
}

TEST_CASE("property: rank agrees with a modular rank oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 9);
    const int cols = 1 + static_cast<int>(rng() % 9);
    auto m = random_matrix(rng, rows, cols, 10 + static_cast<int>(rng() % 80));
    CHECK(homtutte::rank(m.exact) == oracle::rank_mod_p(m.ints));
    CHECK(homtutte::rank(m.exact.transpose()) == homtutte::rank(m.exact));
  }
}

TEST_CASE("property: kernel basis is a basis of the null space") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 9);
    auto m = random_matrix(rng, rows, cols, 50);
    auto kernel = homtutte::kernel_basis(m.exact);
    CHECK(static_cast<int>(kernel.size()) == cols - homtutte::rank(m.exact));
    for (const auto& z : kernel) CHECK(is_zero(m.exact * z));
    if (!kernel.empty()) CHECK(homtutte::rank(SparseMatrix::from_columns(cols, kernel)) == static_cast<int>(kernel.size()));
  }
}

TEST_CASE("property: image basis spans the column space with original columns") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(rng, 6, 8, 40);
    auto image = homtutte::image_basis(m.exact);
    CHECK(static_cast<int>(image.size()) == homtutte::rank(m.exact));
    if (image.empty()) continue;
    SparseMatrix span = SparseMatrix::from_columns(6, image);
    CHECK(homtutte::rank(SparseMatrix::hstack(span, m.exact)) == homtutte::rank(m.exact));
  }
}

TEST_CASE("property: solve returns a solution exactly when one exists") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    auto m = random_matrix(rng, 5, 4, 60);
    Vector x(4);
    for (auto& v : x) v = static_cast<std::int64_t>(rng() % 7) - 3;
    Vector b = m.exact * x;
    auto sol = homtutte::solve(m.exact, b);
    REQUIRE(sol.has_value());
    CHECK(m.exact * *sol == b);
    // A random right-hand side is consistent only if it lies in the image.
    Vector c(5);
    for (auto& v : c) v = static_cast<std::int64_t>(rng() % 7) - 3;
    const bool consistent =
        homtutte::rank(SparseMatrix::hstack(m.exact, SparseMatrix::from_columns(5, std::vector<Vector>{c}))) ==
        homtutte::rank(m.exact);
    auto sol2 = homtutte::solve(m.exact, c);
    CHECK(sol2.has_value() == consistent);
    if (sol2) CHECK(m.exact * *sol2 == c);
  }
}

TEST_CASE("inverse of an invertible matrix") {
  std::mt19937_64 rng(23);
  int tested = 0;
  while (tested < 50) {
    auto m = random_matrix(rng, 4, 4, 70);
    if (homtutte::rank(m.exact) < 4) {
      CHECK_THROWS(homtutte::inverse(m.exact));
      continue;
    }
    ++tested;
    CHECK(homtutte::inverse(m.exact) * m.exact == SparseMatrix::identity(4));
    CHECK(m.exact * homtutte::inverse(m.exact) == SparseMatrix::identity(4));
  }
}

TEST_CASE("congruence signature of small forms") {
  using homtutte::Signature;
  CHECK(homtutte::congruence_signature(SparseMatrix::from_dense({{0, 1}, {1, 0}})) == Signature{1, 1, 0});
  CHECK(homtutte::congruence_signature(SparseMatrix::from_dense({{1, 0}, {0, 1}})) == Signature{2, 0, 0});
  CHECK(homtutte::congruence_signature(SparseMatrix::from_dense({{-2}})) == Signature{0, 1, 0});
  CHECK(homtutte::congruence_signature(SparseMatrix::from_dense({{1, 1}, {1, 1}})) == Signature{1, 0, 1});
  CHECK(homtutte::congruence_signature(SparseMatrix(0, 0)) == Signature{0, 0, 0});
  CHECK_THROWS_AS(homtutte::congruence_signature(SparseMatrix::from_dense({{0, 1}, {-1, 0}})), std::invalid_argument);
}

TEST_CASE("property: signature is a congruence invariant") {
  // Sylvester: P^T D P has the inertia of D for invertible P.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Vector> d(n, Vector(n));
    homtutte::Signature expected;
    for (int i = 0; i < n; ++i) {
      const int kind = static_cast<int>(rng() % 3);
      d[i][i] = kind == 0 ? 0 : (kind == 1 ? 1 + static_cast<int>(rng() % 3) : -1 - static_cast<int>(rng() % 3));
      (kind == 0 ? expected.zero : kind == 1 ? expected.positive : expected.negative)++;
    }
    SparseMatrix p;
    do {
      p = random_matrix(rng, n, n, 70).exact;
    } while (homtutte::rank(p) < n);
    SparseMatrix form = p.transpose() * SparseMatrix::from_dense(d) * p;
    CHECK(homtutte::congruence_signature(form) == expected);
  }
}

TEST_CASE("property: incremental column basis tracks rank and undoes cleanly") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(rng, 7, 10, 35);
    homtutte::ColumnBasis basis(7);
    std::vector<int> taken;
    for (int j = 0; j < 10; ++j) {
      basis.insert(m.exact.column(j));
      taken.push_back(j);
      CHECK(basis.size() == oracle::rank_mod_p(m.ints, taken));
    }
    while (basis.size() > 0) {
      basis.pop_back();
    }
    CHECK(basis.size() == 0);
    // Reinsertion after full undo reproduces the same rank profile.
    taken.clear();
    for (int j = 9; j >= 0; --j) {
      const int pivot = basis.insert(m.exact.column(j));
      taken.push_back(j);
      CHECK((pivot >= 0) == (basis.size() == oracle::rank_mod_p(m.ints, taken) && pivot >= 0));
      CHECK(basis.size() == oracle::rank_mod_p(m.ints, taken));
      CHECK(basis.contains(m.exact.column(j)));
    }
  }
}

TEST_CASE("sparse matrix shape checks") {
  CHECK_THROWS(SparseMatrix::from_dense({{1, 2}, {3}}));
  CHECK_THROWS(SparseMatrix(2, 2) * SparseMatrix(3, 1));
  SparseMatrix m = SparseMatrix::from_dense({{1, 0, 2}, {0, 0, 3}});
  CHECK(m.nnz() == 3);
  CHECK(m.transpose().transpose() == m);
  CHECK(m.at(1, 2) == 3);
  CHECK(SparseMatrix::vstack(m, m).rows() == 4);
}
