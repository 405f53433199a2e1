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

#include "homtutte/sparse_matrix.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace homtutte {

SparseVector to_sparse(const Vector& dense) {
  SparseVector out;
  for (int i = 0; i < static_cast<int>(dense.size()); ++i) {
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  }
  return out;
}

Vector to_dense(const SparseVector& sparse, int size) {
  Vector out(size);
  for (const auto& [i, v] : sparse) out[i] = v;
  return out;
}

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Rational v = ia->second + factor * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  SparseMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged dense matrix");
    for (int j = 0; j < c; ++j) {
      if (!rows[i][j].is_zero()) m.columns_[j].emplace_back(i, rows[i][j]);
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, std::span<const Vector> columns) {
  SparseMatrix m(rows, static_cast<int>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (static_cast<int>(columns[j].size()) != rows) throw std::invalid_argument("column length mismatch");
    m.columns_[j] = to_sparse(columns[j]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_sparse_columns(int rows, std::vector<SparseVector> columns) {
  SparseMatrix m(rows, static_cast<int>(columns.size()));
  for (auto& col : columns) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(col, [](const auto& e) { return e.second.is_zero(); });
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k].first < 0 || col[k].first >= rows) throw std::out_of_range("row index out of range");
      if (k > 0 && col[k].first == col[k - 1].first) throw std::invalid_argument("duplicate matrix entry");
    }
  }
  m.columns_ = std::move(columns);
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& c : columns_) total += c.size();
  return total;
}

Rational SparseMatrix::at(int row, int col) const {
  const auto& c = columns_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return Rational();
}

void SparseMatrix::set(int row, int col, const Rational& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("entry (" + std::to_string(row) + ", " + std::to_string(col) + ") out of range");
  }
  auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
  bool present = it != c.end() && it->first == row;
  if (value.is_zero()) {
    if (present) c.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    c.insert(it, {row, value});
  }
}

std::vector<Vector> SparseMatrix::to_dense() const {
  std::vector<Vector> out(rows_, Vector(cols_));
  for (int j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : columns_[j]) out[i][j] = v;
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int j = 0; j < cols_; ++j) {
    for (const auto& [i, v] : columns_[j]) t.columns_[i].emplace_back(j, v);
  }
  return t;
}

SparseMatrix SparseMatrix::select_columns(std::span<const int> cols) const {
  SparseMatrix m(rows_, static_cast<int>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) m.columns_[k] = columns_.at(cols[k]);
  return m;
}

SparseMatrix SparseMatrix::negated() const {
  SparseMatrix m = *this;
  for (auto& c : m.columns_) {
    for (auto& e : c) e.second = -e.second;
  }
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  SparseMatrix out(a.rows_, b.cols_);
  for (int j = 0; j < b.cols_; ++j) {
    SparseVector acc;
    for (const auto& [k, v] : b.columns_[j]) acc = axpy(acc, v, a.columns_[k]);
    out.columns_[j] = std::move(acc);
  }
  return out;
}

Vector operator*(const SparseMatrix& a, const Vector& x) {
  if (static_cast<int>(x.size()) != a.cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(a.rows_);
  for (int j = 0; j < a.cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& [i, v] : a.columns_[j]) out[i] += v * x[j];
  }
  return out;
}

SparseMatrix SparseMatrix::vstack(const SparseMatrix& top, const SparseMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack column mismatch");
  SparseMatrix m(top.rows_ + bottom.rows_, top.cols_);
  for (int j = 0; j < top.cols_; ++j) {
    m.columns_[j] = top.columns_[j];
    for (const auto& [i, v] : bottom.columns_[j]) m.columns_[j].emplace_back(i + top.rows_, v);
  }
  return m;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& left, const SparseMatrix& right) {
  if (left.rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
  SparseMatrix m(left.rows_, left.cols_ + right.cols_);
  std::copy(left.columns_.begin(), left.columns_.end(), m.columns_.begin());
  std::copy(right.columns_.begin(), right.columns_.end(), m.columns_.begin() + left.cols_);
  return m;
}

}  // namespace homtutte
