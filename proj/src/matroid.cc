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

#include "homtutte/matroid.h"

#include <bit>
#include <stdexcept>

#include "homtutte/exactlin.h"

namespace homtutte {
namespace {

constexpr int kTableLimit = 24;

int submatrix_rank(const SparseMatrix& m, std::uint64_t subset) {
  ColumnBasis basis(m.rows());
  for (int j = 0; j < m.cols(); ++j) {
    if (subset >> j & 1) basis.insert(m.column(j));
  }
  return basis.size();
}

}  // namespace

RankMatroid::RankMatroid(int ground_size, RankFn rank_fn) : ground_size_(ground_size), rank_fn_(std::move(rank_fn)) {
  if (ground_size < 0 || ground_size > kMaxGroundSet) throw std::invalid_argument("matroid ground set too large");
  full_rank_ = rank_fn_(ground_mask());
}

RankMatroid::RankMatroid(std::shared_ptr<const SparseMatrix> columns)
    : ground_size_(columns->cols()), columns_(std::move(columns)) {
  if (ground_size_ > kMaxGroundSet) throw std::invalid_argument("matroid ground set too large");
  rank_fn_ = [m = columns_](std::uint64_t subset) { return submatrix_rank(*m, subset); };
  full_rank_ = rank_fn_(ground_mask());
}

std::uint64_t RankMatroid::ground_mask() const {
  return ground_size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground_size_) - 1;
}

int RankMatroid::rank(std::uint64_t subset) const {
  if (subset & ~ground_mask()) throw std::out_of_range("subset outside the ground set");
  if (table_) return (*table_)[subset];
  return rank_fn_(subset);
}

RankMatroid RankMatroid::tabulated(const SweepOptions& opts) const {
  if (ground_size_ > kTableLimit) throw CapExceededError("rank tables are limited to 2^24 subsets");
  check_cap(ground_size_, opts);
  auto table = std::make_shared<std::vector<std::uint8_t>>(std::size_t{1} << ground_size_);
  if (columns_) {
    SweepProblem problem{columns_->rows(), 0, {}};
    for (int j = 0; j < columns_->cols(); ++j) problem.columns.push_back(columns_->column(j));
    // Distinct leaves write distinct slots.
    sweep_subsets(
        problem, opts, [](const std::vector<Vector>&) { return 0; },
        [&](int, std::uint64_t mask, const LeafState& s, int) {
          (*table)[mask] = static_cast<std::uint8_t>(s.boundary_rank);
        });
  } else {
    for (std::uint64_t a = 0; a <= ground_mask(); ++a) (*table)[a] = static_cast<std::uint8_t>(rank_fn_(a));
  }
  RankMatroid out = *this;
  out.table_ = std::move(table);
  return out;
}

RankMatroid simplicial_matroid(const ChainComplex& c, int n) {
  if (n < 0 || n > c.top_dimension()) throw std::out_of_range("simplicial_matroid: dimension out of range");
  return column_matroid(c.boundary(n));
}

RankMatroid column_matroid(const SparseMatrix& m) { return RankMatroid(std::make_shared<const SparseMatrix>(m)); }

MultiPoly matroid_tutte(const RankMatroid& m, const SweepOptions& opts) {
  check_cap(m.ground_size(), opts);
  const int full = m.full_rank();
  MultiPoly p = MultiPoly::tutte_ring();
  for (std::uint64_t a = 0; a <= m.ground_mask(); ++a) {
    const int r = m.rank(a);
    p.add_term({full - r, std::popcount(a) - r}, 1);
  }
  return p;
}

RankMatroid dual_matroid(const RankMatroid& m) {
  const std::uint64_t ground = m.ground_mask();
  const int full = m.full_rank();
  return RankMatroid(m.ground_size(), [m, ground, full](std::uint64_t a) {
    return std::popcount(a) - full + m.rank(ground & ~a);
  });
}

std::optional<std::uint64_t> first_rank_difference(const RankMatroid& a, const RankMatroid& b) {
  if (a.ground_size() != b.ground_size()) throw std::invalid_argument("matroids on different ground sets");
  if (a.ground_size() > kTableLimit) throw CapExceededError("exhaustive matroid comparison limited to 24 elements");
  for (std::uint64_t s = 0; s <= a.ground_mask(); ++s) {
    if (a.rank(s) != b.rank(s)) return s;
  }
  return std::nullopt;
}

bool matroids_equal(const RankMatroid& a, const RankMatroid& b) { return !first_rank_difference(a, b).has_value(); }

}  // namespace homtutte
