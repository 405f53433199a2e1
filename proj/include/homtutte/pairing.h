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

// Intersection form of a triangulated closed oriented 2n-manifold, from
// simplicial cup products evaluated on the fundamental cycle.

#ifndef HOMTUTTE_PAIRING_H_
#define HOMTUTTE_PAIRING_H_

#include "homtutte/complexes.h"
#include "homtutte/embedding.h"

namespace homtutte {

struct CochainBasis {
  int n = 0;
  SparseMatrix cocycles;    // m x r, column i is beta_i
  SparseMatrix evaluation;  // r x r, <beta_i, R_j>; identity by construction
};

// Cycle representatives extending a basis of the boundaries B_n to one of
// the cycles Z_n; the r columns form a basis of H_n.
SparseMatrix homology_basis(const ChainComplex& c, int n);

// Linear map Psi with Psi * D_{n+1} = 0 and Psi * R = I: zero on B_n and on
// a complement of Z_n, identity on the columns of R.
SparseMatrix homology_projection(const ChainComplex& c, int n, const SparseMatrix& cycles);

// Cocycles beta_i with <beta_i, R_j> = delta_ij. Throws std::invalid_argument
// when `cycles` is not a homology basis.
CochainBasis cohomology_basis(const ChainComplex& c, int n, const SparseMatrix& cycles);

// <alpha cup beta, mu> with the front-face/back-face cup formula on the
// sorted vertex order: sum over 2n-simplices [v0..v2n] of
//   mu * alpha([v0..vn]) * beta([vn..v2n]).
Rational cup_evaluate(const SimplicialComplex& k, const Vector& alpha, const Vector& beta, const Vector& mu);

// Cup-product matrix G_ij = <beta_i cup beta_j, mu>.
SparseMatrix cup_matrix(const SimplicialComplex& k, const SparseMatrix& cocycles, const Vector& mu);

// Assembles and validates the datum for K inside the manifold it
// triangulates. Q is the intersection form in the basis R, which is
// (G^-1)^T for the cup-product matrix G of the Kronecker-dual cocycles.
// Throws NotOrientableError when there is no +-1 fundamental cycle and
// InvalidDatumError when the cup form is degenerate.
EmbeddingDatum build_embedding(const SimplicialComplex& k, int n, bool flip_orientation = false);

}  // namespace homtutte

#endif  // HOMTUTTE_PAIRING_H_
