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

// Exact linear algebra over the rationals.
//
// Everything here is a pure function of its arguments. Column reduction
// uses the "low" pivot rule: a vector's pivot is its largest nonzero row
// index, the convention used for boundary matrices in persistent homology.

#ifndef HOMTUTTE_EXACTLIN_H_
#define HOMTUTTE_EXACTLIN_H_

#include <optional>
#include <vector>

#include "homtutte/sparse_matrix.h"

namespace homtutte {

int rank(const SparseMatrix& m);
std::vector<Vector> kernel_basis(const SparseMatrix& m);
std::vector<Vector> image_basis(const SparseMatrix& m);

// Any x with m * x == b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const SparseMatrix& m, const Vector& b);

// Inverse of a square nonsingular matrix; throws std::domain_error otherwise.
SparseMatrix inverse(const SparseMatrix& m);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Inertia of a symmetric matrix via exact congruence diagonalization.
// Throws std::invalid_argument for non-symmetric input.
Signature congruence_signature(const SparseMatrix& s);

// Incremental column-echelon basis. insert() reduces a vector against the
// stored ones and keeps it when independent; pop_back() undoes the last
// successful insert. Stored vectors are normalized to pivot entry 1.
class ColumnBasis {
 public:
  explicit ColumnBasis(int dimension);

  int dimension() const { return static_cast<int>(owner_.size()); }
  int size() const { return static_cast<int>(vectors_.size()); }

  // Returns the pivot row of the new basis vector, or -1 if v was dependent.
  int insert(SparseVector v);
  void pop_back();

  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  const SparseVector& vector(int i) const { return vectors_[i]; }
  int pivot(int i) const { return vectors_[i].back().first; }

 private:
  std::vector<SparseVector> vectors_;
  std::vector<int> owner_;
};

}  // namespace homtutte

#endif  // HOMTUTTE_EXACTLIN_H_
