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

// Exhaustive checks of the duality theorems and identities on one input.
// Each suite returns a list of named checks; selector-level failures carry
// the first failing selector bitmask.

#ifndef HOMTUTTE_VERIFY_H_
#define HOMTUTTE_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homtutte/complexes.h"
#include "homtutte/embedding.h"
#include "homtutte/sweep.h"

namespace homtutte {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<std::uint64_t> counterexample;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::uint64_t subsets = 0;  // selectors visited, summed over checks
  bool passed() const;
};

// T^j_K(X, Y) = T^{N-j}_{K*}(Y, X) for 1 <= j <= N - 1.
VerifyReport verify_sphere_t(const ChainComplex& c, const SweepOptions& opts = {});

// Matroid state sum against the homological one, T_{M*}(X, Y) = T_M(Y, X),
// and, on homology spheres, M_j(K)* = M_{N-j}(K*) rank function by rank
// function.
VerifyReport verify_matroid(const ChainComplex& c, const SweepOptions& opts = {});

// P_{K*}(X, Y, A, B) = P_K(Y, X, B, A), plus the selector-level exchange
// of (X exponent, k) and (s, s_perp) between L and its dual complement.
VerifyReport verify_p_duality(const EmbeddingDatum& e, const SweepOptions& opts = {});

// k + l + s = dim H_n(L) and s + s_perp + 2l = r on every selector, and
// the signed splits for even n.
VerifyReport verify_identities(const EmbeddingDatum& e, const SweepOptions& opts = {});

// T_K(X, Y) = Y^(r/2) P(X, Y, Y^(1/2), Y^(-1/2)).
VerifyReport verify_specialize(const EmbeddingDatum& e, const SweepOptions& opts = {});

std::string mask_string(std::uint64_t mask, int bits);

}  // namespace homtutte

#endif  // HOMTUTTE_VERIFY_H_
