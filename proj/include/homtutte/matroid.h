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

#ifndef HOMTUTTE_MATROID_H_
#define HOMTUTTE_MATROID_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "homtutte/complexes.h"
#include "homtutte/multipoly.h"
#include "homtutte/sweep.h"

namespace homtutte {

// A matroid given by its rank function on subsets of {0, ..., m-1}, with
// subsets encoded as bitmasks. Every matroid built here is linear over Q.
class RankMatroid {
 public:
  using RankFn = std::function<int(std::uint64_t)>;

  RankMatroid(int ground_size, RankFn rank_fn);
  // Column matroid of a matrix; remembers the matrix so tabulation can
  // use the incremental sweep.
  explicit RankMatroid(std::shared_ptr<const SparseMatrix> columns);

  int ground_size() const { return ground_size_; }
  int rank(std::uint64_t subset) const;
  int full_rank() const { return full_rank_; }
  std::uint64_t ground_mask() const;

  // Copy whose ranks are served from a precomputed table of all 2^m
  // subsets. Requires m <= 24.
  RankMatroid tabulated(const SweepOptions& opts = {}) const;
  bool is_tabulated() const { return table_ != nullptr; }

 private:
  int ground_size_;
  RankFn rank_fn_;
  std::shared_ptr<const SparseMatrix> columns_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
  int full_rank_ = 0;
};

// Column matroid of D_n: r(A) = rank of the columns indexed by A.
RankMatroid simplicial_matroid(const ChainComplex& c, int n);

// Matroid of the columns of an arbitrary rational matrix.
RankMatroid column_matroid(const SparseMatrix& m);

// Sum over A of X^(r(E) - r(A)) * Y^(|A| - r(A)).
MultiPoly matroid_tutte(const RankMatroid& m, const SweepOptions& opts = {});

// r*(A) = |A| - r(E) + r(E \ A)
RankMatroid dual_matroid(const RankMatroid& m);

// First subset on which the rank functions disagree, or nullopt if they
// agree everywhere. Ground sets must match and be at most 24 elements.
std::optional<std::uint64_t> first_rank_difference(const RankMatroid& a, const RankMatroid& b);
bool matroids_equal(const RankMatroid& a, const RankMatroid& b);

}  // namespace homtutte

#endif  // HOMTUTTE_MATROID_H_
