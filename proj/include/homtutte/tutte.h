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

#ifndef HOMTUTTE_TUTTE_H_
#define HOMTUTTE_TUTTE_H_

#include <utility>
#include <vector>

#include "homtutte/complexes.h"
#include "homtutte/multipoly.h"
#include "homtutte/sweep.h"

namespace homtutte {

// Multigraph; loops and parallel edges allowed.
struct GraphView {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Sum over spanning j-subcomplexes L of
//   X^(b_{j-1}(L) - b_{j-1}(K^(j))) * Y^(b_j(L)).
MultiPoly tutte_homological(const ChainComplex& c, int j, const SweepOptions& opts = {});

// Whitney rank-generating form of the graph Tutte polynomial, summed over
// spanning subgraphs with union-find component counts:
//   X^(c(H) - c(G)) * Y^(c(H) + |E(H)| - |V|).
MultiPoly tutte_graph(const GraphView& g, const SweepOptions& opts = {});

// The graph as a one-dimensional chain complex (loops give zero columns).
ChainComplex graph_chain_complex(const GraphView& g);

inline Rational evaluate(const MultiPoly& p, std::span<const Rational> point) { return p.evaluate(point); }

inline std::string canonical_string(const MultiPoly& p) { return p.canonical_string(); }

// p(Y, X) for p in the (X, Y) ring.
MultiPoly swap_xy(const MultiPoly& p);

}  // namespace homtutte

#endif  // HOMTUTTE_TUTTE_H_
