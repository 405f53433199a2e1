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

#include "homtutte/complexes.h"

#include <algorithm>
#include <set>

#include "homtutte/exactlin.h"

namespace homtutte {

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<int>>& facets) {
  std::set<Simplex> all;
  for (const auto& f : facets) {
    if (f.empty()) throw std::invalid_argument("empty facet");
    Simplex s = f;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("facet has a repeated vertex");
    }
    if (s.size() > 30) throw std::invalid_argument("facet dimension too large");
    const int size = static_cast<int>(s.size());
    for (std::uint32_t bits = 1; bits < (1u << size); ++bits) {
      Simplex face;
      for (int i = 0; i < size; ++i) {
        if (bits >> i & 1) face.push_back(s[i]);
      }
      all.insert(std::move(face));
    }
  }
  SimplicialComplex k;
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    if (k.cells_.size() <= d) k.cells_.resize(d + 1);
    k.cells_[d].push_back(s);
  }
  k.index_.resize(k.cells_.size());
  for (std::size_t d = 0; d < k.cells_.size(); ++d) {
    std::sort(k.cells_[d].begin(), k.cells_[d].end());
    for (int i = 0; i < static_cast<int>(k.cells_[d].size()); ++i) k.index_[d].emplace(k.cells_[d][i], i);
  }
  return k;
}

int SimplicialComplex::cell_count(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return static_cast<int>(cells_[k].size());
}

int SimplicialComplex::index_of(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dimension()) return -1;
  auto it = index_[d].find(s);
  return it == index_[d].end() ? -1 : it->second;
}

std::vector<int> SimplicialComplex::f_vector() const {
  std::vector<int> f;
  for (const auto& c : cells_) f.push_back(static_cast<int>(c.size()));
  return f;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  // A simplex is a facet iff no cofacet contains it.
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::set<Simplex> covered;
    if (d < dimension()) {
      for (const auto& t : cells_[d + 1]) {
        for (std::size_t i = 0; i < t.size(); ++i) {
          Simplex face = t;
          face.erase(face.begin() + i);
          covered.insert(face);
        }
      }
    }
    for (const auto& s : cells_[d]) {
      if (!covered.count(s)) out.push_back(s);
    }
  }
  return out;
}

ChainComplex::ChainComplex(std::vector<int> dims, std::vector<SparseMatrix> boundaries) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("chain complex needs at least C_0");
  const int top = top_dimension();
  if (static_cast<int>(boundaries.size()) != top) {
    throw std::invalid_argument("expected " + std::to_string(top) + " boundary matrices, got " +
                                std::to_string(boundaries.size()));
  }
  for (int d : dims_) {
    if (d < 0) throw std::invalid_argument("negative cell count");
  }
  boundaries_.reserve(top + 2);
  boundaries_.emplace_back(0, dims_[0]);
  for (int k = 1; k <= top; ++k) {
    const SparseMatrix& b = boundaries[k - 1];
    if (b.rows() != dims_[k - 1] || b.cols() != dims_[k]) {
      throw std::invalid_argument("D_" + std::to_string(k) + " has shape " + std::to_string(b.rows()) + "x" +
                                  std::to_string(b.cols()) + ", expected " + std::to_string(dims_[k - 1]) + "x" +
                                  std::to_string(dims_[k]));
    }
    boundaries_.push_back(std::move(boundaries[k - 1]));
  }
  boundaries_.emplace_back(dims_[top], 0);
  for (int k = 1; k < top; ++k) {
    if (!(boundaries_[k] * boundaries_[k + 1]).is_zero()) {
      throw std::invalid_argument("D_" + std::to_string(k) + " * D_" + std::to_string(k + 1) + " is not zero");
    }
  }
}

int ChainComplex::cell_count(int k) const {
  if (k < 0 || k > top_dimension()) return 0;
  return dims_[k];
}

const SparseMatrix& ChainComplex::boundary(int k) const { return boundaries_.at(k); }

SpanningSelector SpanningSelector::from_mask(int dimension, int cell_count, std::uint64_t mask) {
  if (cell_count > 64) throw std::invalid_argument("bitmask selectors cover at most 64 cells");
  SpanningSelector sel{dimension, std::vector<bool>(cell_count)};
  for (int i = 0; i < cell_count; ++i) sel.cells[i] = mask >> i & 1;
  return sel;
}

SpanningSelector SpanningSelector::full(int dimension, int cell_count) {
  return SpanningSelector{dimension, std::vector<bool>(cell_count, true)};
}

std::vector<int> SpanningSelector::selected() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    if (cells[i]) out.push_back(i);
  }
  return out;
}

ChainComplex chain_complex(const SimplicialComplex& k) {
  const int top = k.dimension();
  if (top < 0) return ChainComplex({0}, {});
  std::vector<int> dims = k.f_vector();
  std::vector<SparseMatrix> boundaries;
  for (int d = 1; d <= top; ++d) {
    std::vector<SparseVector> columns;
    for (const auto& s : k.simplices(d)) {
      SparseVector col;
      for (int i = 0; i <= d; ++i) {
        Simplex face = s;
        face.erase(face.begin() + i);
        col.emplace_back(k.index_of(face), Rational(i % 2 == 0 ? 1 : -1));
      }
      columns.push_back(std::move(col));
    }
    boundaries.push_back(SparseMatrix::from_sparse_columns(dims[d - 1], std::move(columns)));
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

int betti(const ChainComplex& c, int k) {
  if (k < 0 || k > c.top_dimension()) throw std::out_of_range("betti: dimension out of range");
  return c.cell_count(k) - rank(c.boundary(k)) - rank(c.boundary(k + 1));
}

std::vector<int> betti_numbers(const ChainComplex& c) {
  const int top = c.top_dimension();
  std::vector<int> ranks(top + 2);
  for (int k = 0; k <= top + 1; ++k) ranks[k] = rank(c.boundary(k));
  std::vector<int> out;
  for (int k = 0; k <= top; ++k) out.push_back(c.cell_count(k) - ranks[k] - ranks[k + 1]);
  return out;
}

ChainComplex algebraic_dual(const ChainComplex& c) {
  const int top = c.top_dimension();
  std::vector<int> dims(c.dims().rbegin(), c.dims().rend());
  std::vector<SparseMatrix> boundaries;
  for (int k = 1; k <= top; ++k) boundaries.push_back(c.boundary(top - k + 1).transpose());
  return ChainComplex(std::move(dims), std::move(boundaries));
}

ChainComplex spanning_subcomplex(const ChainComplex& c, const SpanningSelector& sel) {
  const int n = sel.dimension;
  if (n < 0 || n > c.top_dimension()) throw std::out_of_range("selector dimension out of range");
  if (static_cast<int>(sel.cells.size()) != c.cell_count(n)) {
    throw std::invalid_argument("selector length does not match the n-cell count");
  }
  std::vector<int> chosen = sel.selected();
  std::vector<int> dims(c.dims().begin(), c.dims().begin() + n);
  dims.push_back(static_cast<int>(chosen.size()));
  std::vector<SparseMatrix> boundaries;
  for (int k = 1; k < n; ++k) boundaries.push_back(c.boundary(k));
  if (n >= 1) boundaries.push_back(c.boundary(n).select_columns(chosen));
  return ChainComplex(std::move(dims), std::move(boundaries));
}

ChainComplex skeleton(const ChainComplex& c, int n) {
  return spanning_subcomplex(c, SpanningSelector::full(n, c.cell_count(n)));
}

Vector fundamental_cycle(const ChainComplex& c) {
  const int top = c.top_dimension();
  std::vector<Vector> cycles = kernel_basis(c.boundary(top));
  if (cycles.size() != 1) {
    throw NotOrientableError("not a closed orientable pseudomanifold: top homology has rank " +
                             std::to_string(cycles.size()));
  }
  Vector mu = cycles[0];
  Rational scale;
  for (const auto& v : mu) {
    if (!v.is_zero()) {
      scale = v;
      break;
    }
  }
  for (auto& v : mu) {
    v /= scale;
    if (!(v == Rational(1) || v == Rational(-1))) {
      throw NotOrientableError("not a closed orientable pseudomanifold: top cycle is not a +-1 vector");
    }
  }
  return mu;
}

}  // namespace homtutte
