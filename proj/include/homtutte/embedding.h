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

// Invariants of a complex K embedded in a closed oriented 2n-manifold M.
//
// The embedding enters only through its effect on middle homology:
//   form      Q   r x r intersection form on H_n(M), Q^T = (-1)^n Q
//   class_map Psi r x m, sends an n-chain of K to its class in H_n(M)
//                 (in the basis realized by `cycles`), kills boundaries
//   cycles    R   m x r, cycle representatives with Psi R = I
// where m is the number of n-cells of K. For a spanning n-subcomplex L,
// with Z_L the n-cycles supported on L:
//   V  = Psi(Z_L),  V^perp = {u : u.v = 0 for all v in V}
//   k  = dim Z_L - dim V
//   l  = dim(V n V^perp),  s = dim V - l,  s_perp = dim V^perp - l
// and for n even s = s_plus + s_minus from the inertia of Q on V/(V n V^perp)
// (likewise s_perp).

#ifndef HOMTUTTE_EMBEDDING_H_
#define HOMTUTTE_EMBEDDING_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "homtutte/complexes.h"
#include "homtutte/multipoly.h"
#include "homtutte/sweep.h"

namespace homtutte {

class InvalidDatumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OddDimensionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EmbeddingDatum {
  int n = 0;
  SparseMatrix form;
  SparseMatrix class_map;
  SparseMatrix cycles;
  ChainComplex complex;

  int r() const { return form.rows(); }
  int cells() const { return complex.cell_count(n); }
};

// Throws InvalidDatumError naming the first violated condition.
void validate_embedding(const EmbeddingDatum& e);

struct SubcomplexInvariants {
  int k = 0;
  int s = 0;
  int s_perp = 0;
  int l = 0;
  // Filled only for even n.
  int s_plus = 0;
  int s_minus = 0;
  int s_perp_plus = 0;
  int s_perp_minus = 0;
  friend bool operator==(const SubcomplexInvariants&, const SubcomplexInvariants&) = default;
};

// Invariants of a subspace V of H_n(M) that do not involve L itself.
struct SubspaceInvariants {
  int dim_v = 0;
  int dim_v_perp = 0;
  int l = 0;
  int s = 0;
  int s_perp = 0;
  int s_plus = 0;
  int s_minus = 0;
  int s_perp_plus = 0;
  int s_perp_minus = 0;
};

// `v_basis` spans V (need not be independent). With `with_signature`, the
// form must be symmetric; throws std::logic_error if Q fails to be
// nondegenerate on V/(V n V^perp).
SubspaceInvariants subspace_invariants(const SparseMatrix& form, const std::vector<Vector>& v_basis,
                                       bool with_signature);

// Definitional computation for one selector (no incremental state).
SubcomplexInvariants subcomplex_invariants(const EmbeddingDatum& e, const SpanningSelector& sel);

struct SelectorRecord {
  int x_exponent = 0;  // b_{n-1}(L) - b_{n-1}(K^(n))
  int cycle_rank = 0;  // dim H_n(L)
  SubcomplexInvariants inv;
};

using SelectorVisitor = std::function<void(int worker, std::uint64_t mask, const SelectorRecord&)>;

// Visits every spanning n-subcomplex of the datum's complex. With the sweep
// engine the visitor runs concurrently from several workers; returns the
// number of worker ids in use.
int for_each_selector(const EmbeddingDatum& e, const SweepOptions& opts, bool with_signature,
                      const SelectorVisitor& visit);

// Sum of X^x Y^k A^s B^s_perp over spanning n-subcomplexes.
MultiPoly poly_P(const EmbeddingDatum& e, const SweepOptions& opts = {});

// Signed refinement over (X, Y, A+, A-, B+, B-). Throws OddDimensionError
// for odd n.
MultiPoly poly_Pbar(const EmbeddingDatum& e, const SweepOptions& opts = {});

// P(X, Y, A, A, B, B)
MultiPoly collapse_signs(const MultiPoly& pbar);
// p(Y, X, B, A)
MultiPoly swap_duality(const MultiPoly& p);
// pbar(Y, X, B+, B-, A+, A-)
MultiPoly swap_duality_signed(const MultiPoly& pbar);
// pbar(X, Y, A-, A+, B-, B+)
MultiPoly swap_orientation(const MultiPoly& pbar);

// Same embedding with Q negated (opposite orientation of M).
EmbeddingDatum flip_orientation(const EmbeddingDatum& e);

// Datum for the dual complex: transposed boundaries, Psi* = Q^-1 R^T, R*
// any solution of Psi* R* = I with D*_n R* = 0. Requires top dimension 2n.
EmbeddingDatum dual_embedding(const EmbeddingDatum& e);

// Per selector X^x Y^(k + (s - s_perp + r) / 2).
MultiPoly specialize_to_T(const EmbeddingDatum& e, const SweepOptions& opts = {});

// P(1, 1, 0, 1): selectors with s = 0.
std::int64_t count_flat_subcomplexes(const EmbeddingDatum& e, const SweepOptions& opts = {});

}  // namespace homtutte

#endif  // HOMTUTTE_EMBEDDING_H_
