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

#ifndef HOMTUTTE_SPARSE_MATRIX_H_
#define HOMTUTTE_SPARSE_MATRIX_H_

#include <span>
#include <utility>
#include <vector>

#include "homtutte/rational.h"

namespace homtutte {

// Sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<int, Rational>>;

SparseVector to_sparse(const Vector& dense);
Vector to_dense(const SparseVector& sparse, int size);

// out = a + factor * b
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

// Column-major sparse matrix over the rationals.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  static SparseMatrix identity(int n);
  static SparseMatrix from_dense(const std::vector<Vector>& rows);
  static SparseMatrix from_columns(int rows, std::span<const Vector> columns);
  static SparseMatrix from_sparse_columns(int rows, std::vector<SparseVector> columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Rational at(int row, int col) const;
  void set(int row, int col, const Rational& value);

  const SparseVector& column(int col) const { return columns_[col]; }
  Vector dense_column(int col) const { return homtutte::to_dense(columns_[col], rows_); }
  std::vector<Vector> to_dense() const;  // row-major

  SparseMatrix transpose() const;
  SparseMatrix select_columns(std::span<const int> cols) const;
  SparseMatrix negated() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend Vector operator*(const SparseMatrix& a, const Vector& x);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

  static SparseMatrix vstack(const SparseMatrix& top, const SparseMatrix& bottom);
  static SparseMatrix hstack(const SparseMatrix& left, const SparseMatrix& right);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace homtutte

#endif  // HOMTUTTE_SPARSE_MATRIX_H_
