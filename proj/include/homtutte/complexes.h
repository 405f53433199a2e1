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

#ifndef HOMTUTTE_COMPLEXES_H_
#define HOMTUTTE_COMPLEXES_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "homtutte/sparse_matrix.h"

namespace homtutte {

using Simplex = std::vector<int>;

// Downward-closed set of simplices. Each simplex is a strictly increasing
// vertex list; cells of each dimension are indexed lexicographically.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Throws std::invalid_argument on empty facets or repeated vertices.
  static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets);

  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<Simplex>& simplices(int k) const { return cells_.at(k); }
  int cell_count(int k) const;
  // -1 when the simplex is not in the complex.
  int index_of(const Simplex& s) const;
  std::vector<int> f_vector() const;
  std::vector<Simplex> facets() const;

 private:
  std::vector<std::vector<Simplex>> cells_;
  std::vector<std::map<Simplex, int>> index_;
};

// Finite chain complex C_N -> ... -> C_0 over the rationals. Construction
// checks that consecutive boundary maps compose to zero.
class ChainComplex {
 public:
  ChainComplex() = default;
  // boundaries[k - 1] is D_k : C_k -> C_{k-1}, for k = 1..N.
  ChainComplex(std::vector<int> dims, std::vector<SparseMatrix> boundaries);

  int top_dimension() const { return static_cast<int>(dims_.size()) - 1; }
  const std::vector<int>& dims() const { return dims_; }
  int cell_count(int k) const;
  // D_k for 0 <= k <= N + 1; D_0 and D_{N+1} are zero maps.
  const SparseMatrix& boundary(int k) const;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  std::vector<int> dims_;
  std::vector<SparseMatrix> boundaries_;  // D_0 .. D_{N+1}
};

// The n-cells kept in a spanning n-subcomplex.
struct SpanningSelector {
  int dimension = 0;
  std::vector<bool> cells;

  static SpanningSelector from_mask(int dimension, int cell_count, std::uint64_t mask);
  static SpanningSelector full(int dimension, int cell_count);
  std::vector<int> selected() const;
};

class NotOrientableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ChainComplex chain_complex(const SimplicialComplex& k);

int betti(const ChainComplex& c, int k);
std::vector<int> betti_numbers(const ChainComplex& c);

// Adjoint dual: k-cells are the (N-k)-cells of c, D*_k = transpose(D_{N-k+1}).
ChainComplex algebraic_dual(const ChainComplex& c);

// Full (n-1)-skeleton, the selected n-cells, nothing above dimension n.
ChainComplex spanning_subcomplex(const ChainComplex& c, const SpanningSelector& sel);

ChainComplex skeleton(const ChainComplex& c, int n);

// Generator of ker D_N with all entries +-1, first entry +1.
// Throws NotOrientableError otherwise.
Vector fundamental_cycle(const ChainComplex& c);

}  // namespace homtutte

#endif  // HOMTUTTE_COMPLEXES_H_
