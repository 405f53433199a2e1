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

#include "homtutte/verify.h"

#include <algorithm>
#include <limits>

#include "homtutte/matroid.h"
#include "homtutte/tutte.h"

namespace homtutte {
namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

CheckResult poly_check(std::string name, const MultiPoly& lhs, const MultiPoly& rhs) {
  CheckResult c{std::move(name), lhs == rhs, {}, std::nullopt};
  if (!c.passed) c.detail = "lhs = " + lhs.canonical_string() + "; rhs = " + rhs.canonical_string();
  return c;
}

// Compact per-selector record for the duality tables.
struct Packed {
  std::uint8_t x, k, s, s_perp, s_plus, s_minus, sp_plus, sp_minus;
};

std::vector<Packed> selector_table(const EmbeddingDatum& e, const SweepOptions& opts, bool with_signature) {
  std::vector<Packed> table(std::size_t{1} << e.cells());
  for_each_selector(e, opts, with_signature, [&](int, std::uint64_t mask, const SelectorRecord& rec) {
    table[mask] = Packed{static_cast<std::uint8_t>(rec.x_exponent),     static_cast<std::uint8_t>(rec.inv.k),
                         static_cast<std::uint8_t>(rec.inv.s),          static_cast<std::uint8_t>(rec.inv.s_perp),
                         static_cast<std::uint8_t>(rec.inv.s_plus),     static_cast<std::uint8_t>(rec.inv.s_minus),
                         static_cast<std::uint8_t>(rec.inv.s_perp_plus), static_cast<std::uint8_t>(rec.inv.s_perp_minus)};
  });
  return table;
}

MultiPoly table_poly(const std::vector<Packed>& table) {
  MultiPoly p = MultiPoly::embedding_ring();
  for (const auto& t : table) p.add_term({t.x, t.k, t.s, t.s_perp}, 1);
  return p;
}

MultiPoly table_poly_signed(const std::vector<Packed>& table) {
  MultiPoly p = MultiPoly::signed_embedding_ring();
  for (const auto& t : table) p.add_term({t.x, t.k, t.s_plus, t.s_minus, t.sp_plus, t.sp_minus}, 1);
  return p;
}

// Tracks the smallest failing selector across workers.
class FailureLog {
 public:
  explicit FailureLog(int workers) : first_(workers, kNone), count_(workers, 0) {}
  void record(int worker, std::uint64_t mask) {
    first_[worker] = std::min(first_[worker], mask);
    ++count_[worker];
  }
  CheckResult result(std::string name, int bits) const {
    std::uint64_t first = *std::min_element(first_.begin(), first_.end());
    std::uint64_t total = 0;
    for (auto c : count_) total += c;
    CheckResult c{std::move(name), total == 0, {}, std::nullopt};
    if (total) {
      c.counterexample = first;
      c.detail = std::to_string(total) + " failing selectors; first " + mask_string(first, bits);
    }
    return c;
  }

 private:
  std::vector<std::uint64_t> first_;
  std::vector<std::uint64_t> count_;
};

bool homology_sphere(const ChainComplex& c) {
  std::vector<int> b = betti_numbers(c);
  const int top = c.top_dimension();
  for (int k = 0; k <= top; ++k) {
    const int expected = (k == 0 || k == top) ? 1 : 0;
    if (b[k] != expected) return false;
  }
  return true;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string mask_string(std::uint64_t mask, int bits) {
  // Cell 0 is the rightmost character.
  std::string s = "0b";
  for (int i = bits - 1; i >= 0; --i) s += (mask >> i & 1) ? '1' : '0';
  if (bits == 0) s += '0';
  return s;
}

VerifyReport verify_sphere_t(const ChainComplex& c, const SweepOptions& opts) {
  VerifyReport report{"sphere-t", {}, 0};
  const int top = c.top_dimension();
  if (top < 2) throw std::invalid_argument("sphere-t needs a complex of dimension at least 2");
  const ChainComplex dual = algebraic_dual(c);
  for (int j = 1; j <= top - 1; ++j) {
    MultiPoly primal = tutte_homological(c, j, opts);
    MultiPoly other = tutte_homological(dual, top - j, opts);
    report.subsets += (std::uint64_t{1} << c.cell_count(j)) * 2;
    report.checks.push_back(poly_check("T^" + std::to_string(j) + "_K(X,Y) = T^" + std::to_string(top - j) +
                                           "_K*(Y,X)",
                                       primal, swap_xy(other)));
  }
  return report;
}

VerifyReport verify_matroid(const ChainComplex& c, const SweepOptions& opts) {
  VerifyReport report{"matroid", {}, 0};
  const int top = c.top_dimension();
  const bool sphere = top >= 2 && homology_sphere(c);
  const ChainComplex dual = algebraic_dual(c);
  for (int j = 1; j <= top; ++j) {
    const std::string tag = " (j=" + std::to_string(j) + ")";
    RankMatroid m = simplicial_matroid(c, j);
    MultiPoly from_matroid = matroid_tutte(m, opts);
    report.subsets += std::uint64_t{1} << m.ground_size();
    report.checks.push_back(poly_check("matroid Tutte = homological Tutte" + tag, from_matroid,
                                       tutte_homological(c, j, opts)));
    report.checks.push_back(
        poly_check("T_M*(X,Y) = T_M(Y,X)" + tag, matroid_tutte(dual_matroid(m), opts), swap_xy(from_matroid)));
    if (sphere && j <= top - 1) {
      RankMatroid lhs = dual_matroid(m.tabulated(opts));
      RankMatroid rhs = simplicial_matroid(dual, top - j).tabulated(opts);
      auto diff = first_rank_difference(lhs, rhs);
      CheckResult r{"M_j(K)* = M_{N-j}(K*)" + tag, !diff.has_value(), {}, diff};
      if (diff) r.detail = "rank functions differ on " + mask_string(*diff, m.ground_size());
      report.checks.push_back(std::move(r));
    }
  }
  return report;
}

VerifyReport verify_p_duality(const EmbeddingDatum& e, const SweepOptions& opts) {
  VerifyReport report{"p-duality", {}, 0};
  const EmbeddingDatum dual = dual_embedding(e);
  const bool even = e.n % 2 == 0;
  const int m = e.cells();
  check_cap(m, opts);
  const std::vector<Packed> primal = selector_table(e, opts, even);
  const std::vector<Packed> other = selector_table(dual, opts, even);
  report.subsets = 2 * primal.size();

  report.checks.push_back(poly_check("P_K*(X,Y,A,B) = P_K(Y,X,B,A)", table_poly(other), swap_duality(table_poly(primal))));
  if (even) {
    report.checks.push_back(poly_check("Pbar_K*(X,Y,A+,A-,B+,B-) = Pbar_K(Y,X,B+,B-,A+,A-)",
                                       table_poly_signed(other), swap_duality_signed(table_poly_signed(primal))));
  }

  const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  FailureLog x_vs_k(1), k_vs_x(1), s_swap(1), signed_swap(1);
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const Packed& l = primal[mask];
    const Packed& d = other[full & ~mask];
    if (d.x != l.k) x_vs_k.record(0, mask);
    if (d.k != l.x) k_vs_x.record(0, mask);
    if (d.s != l.s_perp || d.s_perp != l.s) s_swap.record(0, mask);
    if (even && (d.s_plus != l.sp_plus || d.s_minus != l.sp_minus || d.sp_plus != l.s_plus ||
                 d.sp_minus != l.s_minus)) {
      signed_swap.record(0, mask);
    }
  }
  report.checks.push_back(x_vs_k.result("X exponent of dual complement = k(L)", m));
  report.checks.push_back(k_vs_x.result("k of dual complement = X exponent of L", m));
  report.checks.push_back(s_swap.result("(s, s_perp) of dual complement = (s_perp, s)(L)", m));
  if (even) report.checks.push_back(signed_swap.result("signed splits exchange under duality", m));
  return report;
}

VerifyReport verify_identities(const EmbeddingDatum& e, const SweepOptions& opts) {
  VerifyReport report{"identities", {}, 0};
  const bool even = e.n % 2 == 0;
  const int r = e.r();
  const int workers = resolve_jobs(opts);
  FailureLog rank_identity(workers), form_identity(workers), split(workers);
  std::vector<std::uint64_t> visited(workers, 0);
  for_each_selector(e, opts, even, [&](int worker, std::uint64_t mask, const SelectorRecord& rec) {
    ++visited[worker];
    const auto& v = rec.inv;
    if (v.k + v.l + v.s != rec.cycle_rank) rank_identity.record(worker, mask);
    if (v.s + v.s_perp + 2 * v.l != r) form_identity.record(worker, mask);
    if (even && (v.s != v.s_plus + v.s_minus || v.s_perp != v.s_perp_plus + v.s_perp_minus)) split.record(worker, mask);
  });
  for (auto v : visited) report.subsets += v;
  report.checks.push_back(rank_identity.result("k + l + s = dim H_n(L)", e.cells()));
  report.checks.push_back(form_identity.result("s + s_perp + 2l = r", e.cells()));
  if (even) report.checks.push_back(split.result("s = s+ + s-, s_perp = s_perp+ + s_perp-", e.cells()));
  return report;
}

VerifyReport verify_specialize(const EmbeddingDatum& e, const SweepOptions& opts) {
  VerifyReport report{"specialize", {}, 0};
  MultiPoly tutte = tutte_homological(e.complex, e.n, opts);
  report.subsets = std::uint64_t{2} << e.cells();
  report.checks.push_back(poly_check("Y^(r/2) P(X,Y,Y^1/2,Y^-1/2) = T_K", specialize_to_T(e, opts), tutte));
  if (e.r() == 0) {
    const int target[] = {0, 1, 0, 0};
    MultiPoly p = poly_P(e, opts);
    report.subsets += std::uint64_t{1} << e.cells();
    report.checks.push_back(
        poly_check("P collapses to T when r = 0", p.relabel(MultiPoly::tutte_ring().vars(), target), tutte));
  }
  return report;
}

}  // namespace homtutte
