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

#include "homtutte/pairing.h"

#include <string>

#include "homtutte/exactlin.h"

namespace homtutte {

SparseMatrix homology_basis(const ChainComplex& c, int n) {
  const int m = c.cell_count(n);
  ColumnBasis span(m);
  const SparseMatrix& up = c.boundary(n + 1);
  for (int j = 0; j < up.cols(); ++j) span.insert(up.column(j));
  std::vector<Vector> reps;
  for (const auto& z : kernel_basis(c.boundary(n))) {
    if (span.insert(to_sparse(z)) >= 0) reps.push_back(z);
  }
  return SparseMatrix::from_columns(m, reps);
}

SparseMatrix homology_projection(const ChainComplex& c, int n, const SparseMatrix& cycles) {
  const int m = c.cell_count(n);
  const int r = cycles.cols();
  // T = [B | R | standard-basis completion], square and invertible.
  std::vector<Vector> boundaries = image_basis(c.boundary(n + 1));
  ColumnBasis span(m);
  std::vector<Vector> columns;
  for (const auto& b : boundaries) {
    span.insert(to_sparse(b));
    columns.push_back(b);
  }
  const int offset = static_cast<int>(columns.size());
  for (int j = 0; j < r; ++j) {
    if (span.insert(cycles.column(j)) < 0) throw std::invalid_argument("cycle representatives are dependent modulo boundaries");
    columns.push_back(cycles.dense_column(j));
  }
  for (int i = 0; i < m && static_cast<int>(columns.size()) < m; ++i) {
    Vector e(m);
    e[i] = 1;
    if (span.insert(to_sparse(e)) >= 0) columns.push_back(std::move(e));
  }
  const SparseMatrix t_transposed = SparseMatrix::from_columns(m, columns).transpose();
  // Row i of Psi is row (offset + i) of T^-1: solve T^T y = e_{offset+i}.
  std::vector<Vector> rows;
  for (int i = 0; i < r; ++i) {
    Vector rhs(m);
    rhs[offset + i] = 1;
    rows.push_back(*solve(t_transposed, rhs));
  }
  return r == 0 ? SparseMatrix(0, m) : SparseMatrix::from_dense(rows);
}

CochainBasis cohomology_basis(const ChainComplex& c, int n, const SparseMatrix& cycles) {
  const int m = c.cell_count(n);
  const int r = cycles.cols();
  if (cycles.rows() != m) throw std::invalid_argument("cycle matrix has the wrong number of rows");
  const SparseMatrix coboundary = c.boundary(n + 1).transpose();
  const SparseMatrix system = SparseMatrix::vstack(coboundary, cycles.transpose());
  std::vector<Vector> cocycles;
  for (int i = 0; i < r; ++i) {
    Vector rhs(system.rows());
    rhs[coboundary.rows() + i] = 1;
    auto beta = solve(system, rhs);
    if (!beta) throw std::invalid_argument("Kronecker normalization is singular: cycles are not a homology basis");
    cocycles.push_back(std::move(*beta));
  }
  CochainBasis out;
  out.n = n;
  out.cocycles = SparseMatrix::from_columns(m, cocycles);
  out.evaluation = out.cocycles.transpose() * cycles;
  return out;
}

Rational cup_evaluate(const SimplicialComplex& k, const Vector& alpha, const Vector& beta, const Vector& mu) {
  const int top = k.dimension();
  if (top < 0 || top % 2 != 0) throw std::invalid_argument("cup_evaluate needs an even-dimensional complex");
  const int n = top / 2;
  if (static_cast<int>(alpha.size()) != k.cell_count(n) || static_cast<int>(beta.size()) != k.cell_count(n) ||
      static_cast<int>(mu.size()) != k.cell_count(top)) {
    throw std::invalid_argument("cup_evaluate: cochain or cycle length mismatch");
  }
  Rational total;
  const auto& simplices = k.simplices(top);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (mu[i].is_zero()) continue;
    const Simplex& s = simplices[i];
    Simplex front(s.begin(), s.begin() + n + 1);
    Simplex back(s.begin() + n, s.end());
    const Rational& a = alpha[k.index_of(front)];
    if (a.is_zero()) continue;
    const Rational& b = beta[k.index_of(back)];
    if (b.is_zero()) continue;
    total += mu[i] * a * b;
  }
  return total;
}

SparseMatrix cup_matrix(const SimplicialComplex& k, const SparseMatrix& cocycles, const Vector& mu) {
  const int r = cocycles.cols();
  std::vector<Vector> g(r, Vector(r));
  std::vector<Vector> cols;
  for (int i = 0; i < r; ++i) cols.push_back(cocycles.dense_column(i));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) g[i][j] = cup_evaluate(k, cols[i], cols[j], mu);
  }
  return r == 0 ? SparseMatrix(0, 0) : SparseMatrix::from_dense(g);
}

EmbeddingDatum build_embedding(const SimplicialComplex& k, int n, bool flip_orientation) {
  if (n < 1 || k.dimension() != 2 * n) {
    throw std::invalid_argument("build_embedding needs a " + std::to_string(2 * n) + "-dimensional complex, got " +
                                std::to_string(k.dimension()));
  }
  ChainComplex c = chain_complex(k);
  Vector mu = fundamental_cycle(c);
  if (flip_orientation) {
    for (auto& v : mu) v = -v;
  }
  SparseMatrix cycles = homology_basis(c, n);
  const int r = cycles.cols();
  CochainBasis cob = cohomology_basis(c, n, cycles);
  SparseMatrix g = cup_matrix(k, cob.cocycles, mu);
  if (rank(g) != r) {
    throw InvalidDatumError("cup-product form is degenerate (rank " + std::to_string(rank(g)) + " < " +
                            std::to_string(r) + "); input is not a closed orientable manifold triangulation");
  }
  EmbeddingDatum e;
  e.n = n;
  e.form = r == 0 ? SparseMatrix(0, 0) : inverse(g).transpose();
  e.class_map = homology_projection(c, n, cycles);
  e.cycles = std::move(cycles);
  e.complex = std::move(c);
  validate_embedding(e);
  return e;
}

}  // namespace homtutte
