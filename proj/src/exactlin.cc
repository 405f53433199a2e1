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

#include "homtutte/exactlin.h"

#include <stdexcept>
#include <utility>

namespace homtutte {
namespace {

void scale(SparseVector& v, const Rational& factor) {
  for (auto& e : v) e.second *= factor;
}

// Column reduction that remembers, for every stored vector, which
// combination of the input columns produced it.
class TrackedReducer {
 public:
  TrackedReducer(int rows, int cols) : owner_(rows, -1), cols_(cols) {}

  // Returns true if column was independent of the previous ones; otherwise
  // `relation` receives the kernel vector it produced.
  bool add(const SparseVector& column, int index, SparseVector* relation) {
    SparseVector v = column;
    SparseVector combo{{index, Rational(1)}};
    reduce(v, combo);
    if (v.empty()) {
      if (relation) *relation = std::move(combo);
      return false;
    }
    Rational inv = Rational(1) / v.back().second;
    scale(v, inv);
    scale(combo, inv);
    owner_[v.back().first] = static_cast<int>(vectors_.size());
    vectors_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    return true;
  }

  // Reduces v in place; `combo` tracks v expressed in the input columns,
  // with the convention v_final = v_initial - m * (combo_delta).
  void reduce(SparseVector& v, SparseVector& combo) const {
    while (!v.empty()) {
      int o = owner_[v.back().first];
      if (o < 0) return;
      Rational c = -v.back().second;
      v = axpy(v, c, vectors_[o]);
      combo = axpy(combo, c, combos_[o]);
    }
  }

  int cols() const { return cols_; }

 private:
  std::vector<SparseVector> vectors_;
  std::vector<SparseVector> combos_;
  std::vector<int> owner_;
  int cols_;
};

}  // namespace

ColumnBasis::ColumnBasis(int dimension) : owner_(dimension, -1) {}

SparseVector ColumnBasis::reduce(SparseVector v) const {
  while (!v.empty()) {
    int o = owner_[v.back().first];
    if (o < 0) break;
    Rational c = -v.back().second;
    v = axpy(v, c, vectors_[o]);
  }
  return v;
}

int ColumnBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return -1;
  if (!v.back().second.is_one()) scale(v, Rational(1) / v.back().second);
  int pivot = v.back().first;
  owner_[pivot] = static_cast<int>(vectors_.size());
  vectors_.push_back(std::move(v));
  return pivot;
}

void ColumnBasis::pop_back() {
  owner_[vectors_.back().back().first] = -1;
  vectors_.pop_back();
}

int rank(const SparseMatrix& m) {
  ColumnBasis basis(m.rows());
  for (int j = 0; j < m.cols(); ++j) basis.insert(m.column(j));
  return basis.size();
}

std::vector<Vector> kernel_basis(const SparseMatrix& m) {
  TrackedReducer reducer(m.rows(), m.cols());
  std::vector<Vector> out;
  for (int j = 0; j < m.cols(); ++j) {
    SparseVector relation;
    if (!reducer.add(m.column(j), j, &relation)) out.push_back(to_dense(relation, m.cols()));
  }
  return out;
}

std::vector<Vector> image_basis(const SparseMatrix& m) {
  ColumnBasis basis(m.rows());
  std::vector<Vector> out;
  for (int j = 0; j < m.cols(); ++j) {
    if (basis.insert(m.column(j)) >= 0) out.push_back(m.dense_column(j));
  }
  return out;
}

std::optional<Vector> solve(const SparseMatrix& m, const Vector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  TrackedReducer reducer(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) reducer.add(m.column(j), j, nullptr);
  SparseVector t = to_sparse(b);
  SparseVector combo;
  reducer.reduce(t, combo);
  if (!t.empty()) return std::nullopt;
  // t_final = b + m * combo = 0
  Vector x = to_dense(combo, m.cols());
  for (auto& v : x) v = -v;
  return x;
}

SparseMatrix inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of a non-square matrix");
  int n = m.rows();
  if (rank(m) != n) throw std::domain_error("inverse of a singular matrix");
  std::vector<Vector> columns;
  for (int i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    columns.push_back(*solve(m, e));
  }
  return SparseMatrix::from_columns(n, columns);
}

Signature congruence_signature(const SparseMatrix& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("congruence_signature: matrix not square");
  if (!(s == s.transpose())) throw std::invalid_argument("congruence_signature: matrix not symmetric");
  std::vector<Vector> a = s.to_dense();
  int n = s.rows();
  Signature sig;
  // Simultaneous row/column operations on the trailing block a[k:, k:].
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n && p < 0; ++i) {
      if (!a[i][i].is_zero()) p = i;
    }
    if (p < 0) {
      // All diagonals vanish: a hyperbolic pair (i, j) with a_ij != 0 gives
      // a nonzero diagonal 2 a_ij after adding row/col j to row/col i.
      int pi = -1;
      int pj = -1;
      for (int i = k; i < n && pi < 0; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (!a[i][j].is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi < 0) {
        sig.zero += n - k;
        break;
      }
      for (int c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (int r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      p = pi;
    }
    std::swap(a[k], a[p]);
    for (auto& row : a) std::swap(row[k], row[p]);
    const Rational pivot = a[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      Rational f = a[i][k] / pivot;
      for (int c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      for (int r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
    if (pivot.sign() > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  return sig;
}

}  // namespace homtutte
