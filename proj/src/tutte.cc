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

#include "homtutte/tutte.h"

#include <numeric>
#include <stdexcept>

#include "homtutte/exactlin.h"

namespace homtutte {
namespace {

struct Empty {};

MultiPoly from_table(const std::vector<std::int64_t>& table, int width) {
  MultiPoly p = MultiPoly::tutte_ring();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] != 0) p.add_term({static_cast<int>(i) / width, static_cast<int>(i) % width}, table[i]);
  }
  return p;
}

MultiPoly tutte_reference(const ChainComplex& c, int j) {
  const int cells = c.cell_count(j);
  const int baseline = betti(skeleton(c, j), j - 1);
  MultiPoly p = MultiPoly::tutte_ring();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    ChainComplex sub = spanning_subcomplex(c, SpanningSelector::from_mask(j, cells, mask));
    std::vector<int> b = betti_numbers(sub);
    p.add_term({b[j - 1] - baseline, b[j]}, 1);
  }
  return p;
}

MultiPoly tutte_sweep(const ChainComplex& c, int j, const SweepOptions& opts) {
  const SparseMatrix& d = c.boundary(j);
  SweepProblem problem{d.rows(), 0, {}};
  for (int col = 0; col < d.cols(); ++col) problem.columns.push_back(d.column(col));
  const int full_rank = rank(d);
  const int width = d.cols() + 1;
  const int jobs = resolve_jobs(opts);
  std::vector<std::vector<std::int64_t>> tables(jobs, std::vector<std::int64_t>((full_rank + 1) * width));
  sweep_subsets(
      problem, opts, [](const std::vector<Vector>&) { return Empty{}; },
      [&](int worker, std::uint64_t, const LeafState& s, const Empty&) {
        ++tables[worker][(full_rank - s.boundary_rank) * width + (s.selected - s.boundary_rank)];
      });
  std::vector<std::int64_t> total(tables[0].size());
  for (const auto& t : tables) {
    for (std::size_t i = 0; i < t.size(); ++i) total[i] += t[i];
  }
  return from_table(total, width);
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

MultiPoly tutte_homological(const ChainComplex& c, int j, const SweepOptions& opts) {
  if (j < 1 || j > c.top_dimension()) {
    throw std::out_of_range("tutte_homological: dimension " + std::to_string(j) + " outside [1, " +
                            std::to_string(c.top_dimension()) + "]");
  }
  check_cap(c.cell_count(j), opts);
  return opts.engine == Engine::kReference ? tutte_reference(c, j) : tutte_sweep(c, j, opts);
}

MultiPoly tutte_graph(const GraphView& g, const SweepOptions& opts) {
  if (g.vertices <= 0) throw std::invalid_argument("tutte_graph: graph has no vertices");
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) {
      throw std::out_of_range("tutte_graph: edge endpoint out of range");
    }
  }
  const int m = static_cast<int>(g.edges.size());
  check_cap(m, opts);
  auto components = [&](std::uint64_t mask) {
    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    int count = g.vertices;
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      int a = find(parent, g.edges[e].first);
      int b = find(parent, g.edges[e].second);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
    return count;
  };
  const int base = components((m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  MultiPoly p = MultiPoly::tutte_ring();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int c = components(mask);
    const int edges = std::popcount(mask);
    p.add_term({c - base, c + edges - g.vertices}, 1);
  }
  return p;
}

ChainComplex graph_chain_complex(const GraphView& g) {
  std::vector<SparseVector> columns;
  for (const auto& [u, v] : g.edges) {
    if (u == v) {
      columns.emplace_back();
    } else {
      columns.push_back({{std::min(u, v), Rational(-1)}, {std::max(u, v), Rational(1)}});
    }
  }
  const int m = static_cast<int>(columns.size());
  return ChainComplex({g.vertices, m}, {SparseMatrix::from_sparse_columns(g.vertices, std::move(columns))});
}

MultiPoly swap_xy(const MultiPoly& p) {
  const int target[] = {1, 0};
  return p.swapped(target);
}

}  // namespace homtutte
