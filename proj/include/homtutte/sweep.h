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

// Parallel state-sum kernel over all column subsets of a matrix.
//
// The subsets of m columns are the leaves of a binary include/exclude tree.
// Walking it depth-first keeps one incremental echelon basis per worker:
// descending into "include column i" inserts that column, returning pops it.
// Every leaf therefore sees the exact rank of its column submatrix after a
// single reduction step instead of a full elimination.
//
// The matrix may carry `form_rows` extra rows on top (indices
// [0, form_rows)) holding a linear map Psi on the columns. Since pivots are
// the largest nonzero row, a basis vector whose pivot is a form row has a
// zero boundary part, and those vectors span Psi(ker D|A). The kernel hands
// that subspace to a caller-supplied function whenever it grows, caches the
// result on the stack, and passes it to every leaf below.
//
// The top `split_depth` levels are expanded into independent tasks that run
// under OpenMP with dynamic scheduling; each worker owns its basis and its
// accumulators. Results are merged by the caller in worker order, and every
// merge in this library is a commutative integer sum, so output does not
// depend on the thread count.

#ifndef HOMTUTTE_SWEEP_H_
#define HOMTUTTE_SWEEP_H_

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "homtutte/exactlin.h"

namespace homtutte {

enum class Engine {
  kSweep,      // incremental, OpenMP-parallel
  kReference,  // serial, recomputes every selector from its definition
};

struct SweepOptions {
  int cap_log2 = 24;  // refuse more than 2^cap_log2 subsets
  int jobs = 0;       // 0 = omp_get_max_threads()
  Engine engine = Engine::kSweep;
};

class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest ground set the kernels handle at all (bitmask width).
inline constexpr int kMaxGroundSet = 62;

inline void check_cap(int cells, const SweepOptions& opts) {
  if (cells > opts.cap_log2 || cells > kMaxGroundSet) {
    throw CapExceededError("enumeration of 2^" + std::to_string(cells) + " subsets exceeds the cap of 2^" +
                           std::to_string(std::min(opts.cap_log2, kMaxGroundSet)));
  }
}

inline int resolve_jobs(const SweepOptions& opts) { return opts.jobs > 0 ? opts.jobs : omp_get_max_threads(); }

struct SweepProblem {
  int rows = 0;       // form rows + boundary rows
  int form_rows = 0;  // rows [0, form_rows) are the Psi block
  std::vector<SparseVector> columns;
};

struct LeafState {
  int selected = 0;       // |A|
  int boundary_rank = 0;  // rank of D restricted to A
  int image_dim = 0;      // dim Psi(ker D|A)
};

namespace detail {

template <class Payload, class SubspaceFn, class LeafFn>
class SweepWorker {
 public:
  SweepWorker(const SweepProblem& problem, int worker, SubspaceFn& on_subspace, LeafFn& on_leaf)
      : problem_(problem), worker_(worker), on_subspace_(on_subspace), on_leaf_(on_leaf), basis_(problem.rows) {}

  void run_task(int split_depth, std::uint64_t prefix) {
    payloads_.clear();
    payloads_.push_back(on_subspace_(std::vector<Vector>{}));
    for (int i = 0; i < split_depth; ++i) {
      if (prefix >> i & 1) include(i);
    }
    descend(split_depth, prefix);
    while (!undo_.empty()) undo();
  }

 private:
  struct Undo {
    bool inserted;
    bool form_pivot;
  };

  void include(int column) {
    ++state_.selected;
    int pivot = basis_.insert(problem_.columns[column]);
    Undo u{pivot >= 0, pivot >= 0 && pivot < problem_.form_rows};
    if (u.form_pivot) {
      ++state_.image_dim;
      form_vectors_.push_back(basis_.size() - 1);
      payloads_.push_back(on_subspace_(image_vectors()));
    } else if (u.inserted) {
      ++state_.boundary_rank;
    }
    undo_.push_back(u);
  }

  void undo() {
    Undo u = undo_.back();
    undo_.pop_back();
    --state_.selected;
    if (u.inserted) basis_.pop_back();
    if (u.form_pivot) {
      --state_.image_dim;
      form_vectors_.pop_back();
      payloads_.pop_back();
    } else if (u.inserted) {
      --state_.boundary_rank;
    }
  }

  std::vector<Vector> image_vectors() const {
    std::vector<Vector> out;
    for (int idx : form_vectors_) out.push_back(to_dense(basis_.vector(idx), problem_.form_rows));
    return out;
  }

  void descend(int depth, std::uint64_t mask) {
    if (depth == static_cast<int>(problem_.columns.size())) {
      on_leaf_(worker_, mask, state_, payloads_.back());
      return;
    }
    descend(depth + 1, mask);
    include(depth);
    descend(depth + 1, mask | (std::uint64_t{1} << depth));
    undo();
  }

  const SweepProblem& problem_;
  int worker_;
  SubspaceFn& on_subspace_;
  LeafFn& on_leaf_;
  ColumnBasis basis_;
  LeafState state_;
  std::vector<int> form_vectors_;
  std::vector<Payload> payloads_;
  std::vector<Undo> undo_;
};

}  // namespace detail

// on_subspace(const std::vector<Vector>& basis_of_image) -> Payload
// on_leaf(int worker, std::uint64_t mask, const LeafState&, const Payload&)
// Returns the number of workers used; worker ids are in [0, workers).
template <class SubspaceFn, class LeafFn>
int sweep_subsets(const SweepProblem& problem, const SweepOptions& opts, SubspaceFn on_subspace, LeafFn on_leaf) {
  using Payload = std::decay_t<std::invoke_result_t<SubspaceFn&, const std::vector<Vector>&>>;
  const int m = static_cast<int>(problem.columns.size());
  check_cap(m, opts);
  const int jobs = resolve_jobs(opts);
  int split = 0;
  while (split < m && (1 << split) < jobs * 16 && split < 12) ++split;
  if (jobs == 1) split = 0;
  const std::int64_t tasks = std::int64_t{1} << split;

  std::exception_ptr failure;
#pragma omp parallel num_threads(jobs)
  {
    const int worker = omp_get_thread_num();
    detail::SweepWorker<Payload, SubspaceFn, LeafFn> sweeper(problem, worker, on_subspace, on_leaf);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < tasks; ++t) {
      try {
        sweeper.run_task(split, static_cast<std::uint64_t>(t));
      } catch (...) {
#pragma omp critical(homtutte_sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return jobs;
}

}  // namespace homtutte

#endif  // HOMTUTTE_SWEEP_H_
