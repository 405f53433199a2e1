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

#include "homtutte/embedding.h"

#include <array>
#include <string>
#include <unordered_map>

#include "homtutte/exactlin.h"

namespace homtutte {
namespace {

std::string shape(const SparseMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

SparseMatrix columns_matrix(int rows, const std::vector<Vector>& vectors) {
  return SparseMatrix::from_columns(rows, vectors);
}

// Part of `span` complementary to `sub` (sub must lie inside span).
std::vector<Vector> complement_in(int dim, const std::vector<Vector>& sub, const std::vector<Vector>& span) {
  ColumnBasis basis(dim);
  for (const auto& v : sub) basis.insert(to_sparse(v));
  std::vector<Vector> out;
  for (const auto& v : span) {
    if (basis.insert(to_sparse(v)) >= 0) out.push_back(v);
  }
  return out;
}

Signature gram_signature(const SparseMatrix& form, const std::vector<Vector>& w) {
  if (w.empty()) return {};
  SparseMatrix basis = columns_matrix(form.rows(), w);
  return congruence_signature(basis.transpose() * form * basis);
}

// Packs up to six small exponents into one key.
using Key = std::uint64_t;
constexpr int kKeyBits = 10;

Key pack(std::span<const int> exps) {
  Key k = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) k |= static_cast<Key>(exps[i]) << (kKeyBits * i);
  return k;
}

MultiPoly unpack(MultiPoly ring, const std::unordered_map<Key, std::int64_t>& counts) {
  const std::size_t arity = ring.vars().size();
  for (const auto& [key, coef] : counts) {
    MultiPoly::Exponents e(arity);
    for (std::size_t i = 0; i < arity; ++i) e[i] = static_cast<int>(key >> (kKeyBits * i) & ((1 << kKeyBits) - 1));
    ring.add_term(e, coef);
  }
  return ring;
}

// Accumulates one monomial per selector into per-worker tables.
template <class MonomialFn>
MultiPoly state_sum(const EmbeddingDatum& e, const SweepOptions& opts, bool with_signature, MultiPoly ring,
                    MonomialFn monomial) {
  std::vector<std::unordered_map<Key, std::int64_t>> tables(resolve_jobs(opts));
  const int workers = for_each_selector(e, opts, with_signature, [&](int worker, std::uint64_t, const SelectorRecord& rec) {
    ++tables[worker][pack(monomial(rec))];
  });
  std::unordered_map<Key, std::int64_t> total;
  for (int w = 0; w < workers; ++w) {
    for (const auto& [k, c] : tables[w]) total[k] += c;
  }
  return unpack(std::move(ring), total);
}

}  // namespace

void validate_embedding(const EmbeddingDatum& e) {
  const int top = e.complex.top_dimension();
  if (e.n < 1 || e.n > top) {
    throw InvalidDatumError("middle dimension n=" + std::to_string(e.n) + " outside [1, " + std::to_string(top) + "]");
  }
  const int r = e.form.rows();
  const int m = e.cells();
  if (e.form.cols() != r) throw InvalidDatumError("Q must be square, got " + shape(e.form));
  if (e.class_map.rows() != r || e.class_map.cols() != m) {
    throw InvalidDatumError("Psi must be " + std::to_string(r) + "x" + std::to_string(m) + ", got " +
                            shape(e.class_map));
  }
  if (e.cycles.rows() != m || e.cycles.cols() != r) {
    throw InvalidDatumError("R must be " + std::to_string(m) + "x" + std::to_string(r) + ", got " + shape(e.cycles));
  }
  if (rank(e.form) != r) throw InvalidDatumError("Q is degenerate (rank " + std::to_string(rank(e.form)) + " < " +
                                                 std::to_string(r) + ")");
  const SparseMatrix expected = e.n % 2 == 0 ? e.form : e.form.negated();
  if (!(e.form.transpose() == expected)) {
    throw InvalidDatumError(std::string("Q must be ") + (e.n % 2 == 0 ? "symmetric" : "antisymmetric") +
                            " for n=" + std::to_string(e.n));
  }
  if (!(e.class_map * e.complex.boundary(e.n + 1)).is_zero()) {
    throw InvalidDatumError("Psi does not vanish on boundaries (Psi * D_{n+1} != 0)");
  }
  if (!(e.complex.boundary(e.n) * e.cycles).is_zero()) {
    throw InvalidDatumError("columns of R are not cycles (D_n * R != 0)");
  }
  if (!(e.class_map * e.cycles == SparseMatrix::identity(r))) {
    throw InvalidDatumError("Psi * R is not the identity");
  }
}

SubspaceInvariants subspace_invariants(const SparseMatrix& form, const std::vector<Vector>& v_basis,
                                       bool with_signature) {
  const int r = form.rows();
  SubspaceInvariants out;
  std::vector<Vector> v = image_basis(columns_matrix(r, v_basis));
  out.dim_v = static_cast<int>(v.size());
  if (r == 0) return out;

  // V^perp = ker (Q B)^T
  const SparseMatrix b = columns_matrix(r, v);
  std::vector<Vector> perp = v.empty() ? image_basis(SparseMatrix::identity(r)) : kernel_basis((form * b).transpose());
  out.dim_v_perp = static_cast<int>(perp.size());

  // V n V^perp from ker [B | -P]
  std::vector<Vector> meet;
  if (!v.empty() && !perp.empty()) {
    const SparseMatrix stacked = SparseMatrix::hstack(b, columns_matrix(r, perp).negated());
    std::vector<Vector> coords;
    for (const auto& z : kernel_basis(stacked)) coords.emplace_back(z.begin(), z.begin() + out.dim_v);
    if (!coords.empty()) meet = image_basis(b * columns_matrix(out.dim_v, coords));
  }
  out.l = static_cast<int>(meet.size());
  out.s = out.dim_v - out.l;
  out.s_perp = out.dim_v_perp - out.l;

  if (with_signature) {
    Signature sv = gram_signature(form, complement_in(r, meet, v));
    Signature sp = gram_signature(form, complement_in(r, meet, perp));
    if (sv.zero != 0 || sp.zero != 0) throw std::logic_error("form is degenerate on V/(V n V^perp)");
    out.s_plus = sv.positive;
    out.s_minus = sv.negative;
    out.s_perp_plus = sp.positive;
    out.s_perp_minus = sp.negative;
  }
  return out;
}

SubcomplexInvariants subcomplex_invariants(const EmbeddingDatum& e, const SpanningSelector& sel) {
  const int m = e.cells();
  if (sel.dimension != e.n || static_cast<int>(sel.cells.size()) != m) {
    throw std::invalid_argument("selector does not match the datum's n-cells");
  }
  const std::vector<int> chosen = sel.selected();
  std::vector<Vector> cycles;
  for (const auto& z : kernel_basis(e.complex.boundary(e.n).select_columns(chosen))) {
    Vector full(m);
    for (std::size_t i = 0; i < chosen.size(); ++i) full[chosen[i]] = z[i];
    cycles.push_back(std::move(full));
  }
  std::vector<Vector> image;
  for (const auto& z : cycles) image.push_back(e.class_map * z);
  const SubspaceInvariants sub = subspace_invariants(e.form, image, e.n % 2 == 0);
  SubcomplexInvariants out;
  out.k = static_cast<int>(cycles.size()) - sub.dim_v;
  out.s = sub.s;
  out.s_perp = sub.s_perp;
  out.l = sub.l;
  out.s_plus = sub.s_plus;
  out.s_minus = sub.s_minus;
  out.s_perp_plus = sub.s_perp_plus;
  out.s_perp_minus = sub.s_perp_minus;
  return out;
}

int for_each_selector(const EmbeddingDatum& e, const SweepOptions& opts, bool with_signature,
                      const SelectorVisitor& visit) {
  const int m = e.cells();
  check_cap(m, opts);
  const int r = e.r();
  const SparseMatrix& d = e.complex.boundary(e.n);

  if (opts.engine == Engine::kReference) {
    const int baseline = betti(skeleton(e.complex, e.n), e.n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      SpanningSelector sel = SpanningSelector::from_mask(e.n, m, mask);
      std::vector<int> b = betti_numbers(spanning_subcomplex(e.complex, sel));
      SelectorRecord rec{b[e.n - 1] - baseline, b[e.n], subcomplex_invariants(e, sel)};
      visit(0, mask, rec);
    }
    return 1;
  }

  SweepProblem problem{r + d.rows(), r, {}};
  for (int j = 0; j < m; ++j) {
    SparseVector col = e.class_map.column(j);
    for (const auto& [i, v] : d.column(j)) col.emplace_back(i + r, v);
    problem.columns.push_back(std::move(col));
  }
  const int full_rank = rank(d);
  const bool signed_form = with_signature && e.n % 2 == 0;
  return sweep_subsets(
      problem, opts,
      [&](const std::vector<Vector>& image) { return subspace_invariants(e.form, image, signed_form); },
      [&](int worker, std::uint64_t mask, const LeafState& s, const SubspaceInvariants& sub) {
        SelectorRecord rec;
        rec.x_exponent = full_rank - s.boundary_rank;
        rec.cycle_rank = s.selected - s.boundary_rank;
        rec.inv.k = rec.cycle_rank - s.image_dim;
        rec.inv.s = sub.s;
        rec.inv.s_perp = sub.s_perp;
        rec.inv.l = sub.l;
        rec.inv.s_plus = sub.s_plus;
        rec.inv.s_minus = sub.s_minus;
        rec.inv.s_perp_plus = sub.s_perp_plus;
        rec.inv.s_perp_minus = sub.s_perp_minus;
        visit(worker, mask, rec);
      });
}

MultiPoly poly_P(const EmbeddingDatum& e, const SweepOptions& opts) {
  return state_sum(e, opts, false, MultiPoly::embedding_ring(), [](const SelectorRecord& rec) {
    return std::array<int, 4>{rec.x_exponent, rec.inv.k, rec.inv.s, rec.inv.s_perp};
  });
}

MultiPoly poly_Pbar(const EmbeddingDatum& e, const SweepOptions& opts) {
  if (e.n % 2 != 0) {
    throw OddDimensionError("the signed polynomial needs even n (symmetric form); got n=" + std::to_string(e.n));
  }
  return state_sum(e, opts, true, MultiPoly::signed_embedding_ring(), [](const SelectorRecord& rec) {
    return std::array<int, 6>{rec.x_exponent,      rec.inv.k,           rec.inv.s_plus,
                              rec.inv.s_minus,     rec.inv.s_perp_plus, rec.inv.s_perp_minus};
  });
}

MultiPoly collapse_signs(const MultiPoly& pbar) {
  const int target[] = {0, 1, 2, 2, 3, 3};
  return pbar.relabel(MultiPoly::embedding_ring().vars(), target);
}

MultiPoly swap_duality(const MultiPoly& p) {
  const int target[] = {1, 0, 3, 2};
  return p.swapped(target);
}

MultiPoly swap_duality_signed(const MultiPoly& pbar) {
  const int target[] = {1, 0, 4, 5, 2, 3};
  return pbar.swapped(target);
}

MultiPoly swap_orientation(const MultiPoly& pbar) {
  const int target[] = {0, 1, 3, 2, 5, 4};
  return pbar.swapped(target);
}

EmbeddingDatum flip_orientation(const EmbeddingDatum& e) {
  EmbeddingDatum out = e;
  out.form = e.form.negated();
  return out;
}

EmbeddingDatum dual_embedding(const EmbeddingDatum& e) {
  validate_embedding(e);
  if (e.complex.top_dimension() != 2 * e.n) {
    throw InvalidDatumError("dual datum needs a complex of dimension 2n=" + std::to_string(2 * e.n) + ", got " +
                            std::to_string(e.complex.top_dimension()));
  }
  const int r = e.r();
  EmbeddingDatum out;
  out.n = e.n;
  out.form = e.form;
  out.complex = algebraic_dual(e.complex);
  out.class_map = inverse(e.form) * e.cycles.transpose();
  // R*: D*_n R* = 0 and Psi* R* = I.
  const SparseMatrix& dual_boundary = out.complex.boundary(e.n);
  const SparseMatrix system = SparseMatrix::vstack(dual_boundary, out.class_map);
  std::vector<Vector> columns;
  for (int j = 0; j < r; ++j) {
    Vector rhs(system.rows());
    rhs[dual_boundary.rows() + j] = 1;
    auto x = solve(system, rhs);
    if (!x) {
      throw InvalidDatumError("no dual cycle representatives exist; the complex does not look like a closed "
                              "manifold triangulation");
    }
    columns.push_back(std::move(*x));
  }
  out.cycles = SparseMatrix::from_columns(out.cells(), columns);
  validate_embedding(out);
  return out;
}

MultiPoly specialize_to_T(const EmbeddingDatum& e, const SweepOptions& opts) {
  const int r = e.r();
  return state_sum(e, opts, false, MultiPoly::tutte_ring(), [r](const SelectorRecord& rec) {
    const int twice = rec.inv.s - rec.inv.s_perp + r;
    if (twice < 0 || twice % 2 != 0) throw std::logic_error("half-integral Y exponent in the specialization");
    return std::array<int, 2>{rec.x_exponent, rec.inv.k + twice / 2};
  });
}

std::int64_t count_flat_subcomplexes(const EmbeddingDatum& e, const SweepOptions& opts) {
  const Rational point[] = {1, 1, 0, 1};
  Rational value = poly_P(e, opts).evaluate(point);
  return std::stoll(value.to_string());
}

}  // namespace homtutte
