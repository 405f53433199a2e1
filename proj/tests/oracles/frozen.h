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

// Output of tests/oracles/state_sum_oracle.py, frozen. Regenerate with
//   python3 tests/oracles/state_sum_oracle.py

#ifndef HOMTUTTE_TESTS_ORACLES_FROZEN_H_
#define HOMTUTTE_TESTS_ORACLES_FROZEN_H_

#include "oracles/oracle.h"

namespace frozen {

// Boundary of a triangle in degree 1 (the 3-cycle).
inline const oracle::Poly2 kTriangleJ1 = {{{2, 0}, 1}, {{1, 0}, 3}, {{0, 0}, 3}, {{0, 1}, 1}};

// Boundary of the 3-simplex in degree 1 (the graph K4).
inline const oracle::Poly2 kBd3J1 = {{{3, 0}, 1},  {{2, 0}, 6},  {{1, 0}, 15}, {{1, 1}, 4},
                                     {{0, 0}, 16}, {{0, 1}, 15}, {{0, 2}, 6},  {{0, 3}, 1}};

// Boundary of the 4-simplex in degree 1; degree 2 is its X/Y mirror.
inline const oracle::Poly2 kBd4J1 = {{{4, 0}, 1},   {{3, 0}, 10},  {{2, 0}, 45},  {{2, 1}, 10},  {{1, 0}, 110},
                                     {{1, 1}, 85},  {{0, 0}, 125}, {{1, 2}, 30},  {{0, 1}, 222}, {{1, 3}, 5},
                                     {{0, 2}, 205}, {{0, 3}, 120}, {{0, 4}, 45},  {{0, 5}, 10},  {{0, 6}, 1}};

// Betti numbers of the 7-vertex torus.
inline const int kTorus7Betti[] = {1, 2, 1};

// Boundary of the 5-simplex in degree 2.
inline const oracle::Poly2 kBd5J2 = {
    {{10, 0}, 1},    {{9, 0}, 20},    {{8, 0}, 190},   {{7, 0}, 1140},  {{7, 1}, 15},    {{6, 0}, 4830},
    {{6, 1}, 240},   {{5, 0}, 15264}, {{5, 1}, 1860},  {{4, 0}, 36900}, {{5, 2}, 60},    {{4, 1}, 9060},
    {{3, 0}, 68400}, {{4, 2}, 915},   {{3, 1}, 30255}, {{2, 0}, 94800}, {{4, 3}, 60},    {{3, 2}, 6320},
    {{2, 1}, 70860}, {{1, 0}, 90720}, {{4, 4}, 6},     {{3, 3}, 800},   {{2, 2}, 26690}, {{1, 1}, 110640},
    {{0, 0}, 46620}, {{3, 4}, 60},    {{2, 3}, 6320},  {{1, 2}, 70860}, {{0, 1}, 90720}, {{2, 4}, 915},
    {{1, 3}, 30255}, {{0, 2}, 94800}, {{2, 5}, 60},    {{1, 4}, 9060},  {{0, 3}, 68400}, {{1, 5}, 1860},
    {{0, 4}, 36900}, {{1, 6}, 240},   {{0, 5}, 15264}, {{1, 7}, 15},    {{0, 6}, 4830},  {{0, 7}, 1140},
    {{0, 8}, 190},   {{0, 9}, 20},    {{0, 10}, 1}};

}  // namespace frozen

#endif  // HOMTUTTE_TESTS_ORACLES_FROZEN_H_
