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

// Shared helpers for the test binaries.

#ifndef HOMTUTTE_TESTS_SUPPORT_H_
#define HOMTUTTE_TESTS_SUPPORT_H_

#include <algorithm>
#include <string>
#include <vector>

#include "homtutte/complexes.h"
#include "homtutte/io.h"
#include "homtutte/multipoly.h"
#include "oracles/oracle.h"

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(HOMTUTTE_DATA_DIR) + "/" + name; }

inline homtutte::LoadedInput load(const std::string& name) { return homtutte::load_input(fixture(name)); }

// Two-variable view of a Tutte polynomial for comparison with the oracles.
inline oracle::Poly2 to_poly2(const homtutte::MultiPoly& p) {
  oracle::Poly2 out;
  for (const auto& [e, c] : p.terms()) out[{e.at(0), e.at(1)}] = c;
  return out;
}

inline std::vector<std::vector<int>> boundary_facets(int n) {
  // Facets of the boundary of the n-simplex.
  std::vector<std::vector<int>> out;
  for (int skip = n; skip >= 0; --skip) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v) {
      if (v != skip) f.push_back(v);
    }
    out.push_back(f);
  }
  return out;
}

inline std::vector<std::vector<int>> torus7_facets() {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 7; ++i) {
    for (int step : {1, 2}) {
      std::vector<int> f{i, (i + step) % 7, (i + 3) % 7};
      std::sort(f.begin(), f.end());
      out.push_back(f);
    }
  }
  return out;
}

// Staircase triangulation of the product of two 2-sphere boundaries of the
// 3-simplex: vertex (a, b) is 4a + b, and every pair of triangles yields
// one 4-simplex per monotone lattice path.
inline std::vector<std::vector<int>> sphere_product_facets() {
  auto tris = boundary_facets(3);
  std::vector<std::vector<int>> out;
  for (const auto& s : tris) {
    for (const auto& t : tris) {
      for (int path = 0; path < 16; ++path) {
        if (__builtin_popcount(path) != 2) continue;
        int i = 0, j = 0;
        std::vector<int> f{4 * s[0] + t[0]};
        for (int step = 0; step < 4; ++step) {
          if (path >> step & 1) ++i; else ++j;
          f.push_back(4 * s[i] + t[j]);
        }
        out.push_back(f);
      }
    }
  }
  return out;
}

}  // namespace testing_support

#endif  // HOMTUTTE_TESTS_SUPPORT_H_
