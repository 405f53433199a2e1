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

#include "homtutte/multipoly.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homtutte {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

Rational power(const Rational& base, int exp) {
  Rational out(1);
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<Variable> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::tutte_ring() { return MultiPoly({{"X", 1}, {"Y", -1}}); }

MultiPoly MultiPoly::embedding_ring() { return MultiPoly({{"X", 1}, {"Y", -1}, {"A", 1}, {"B", -1}}); }

MultiPoly MultiPoly::signed_embedding_ring() {
  return MultiPoly({{"X", 1}, {"Y", -1}, {"A+", 1}, {"A-", 1}, {"B+", -1}, {"B-", -1}});
}

void MultiPoly::add_term(const Exponents& exps, std::int64_t coef) {
  if (exps.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coef);
  if (!inserted) {
    it->second = checked_add(it->second, coef);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<MultiPoly::Exponents, std::int64_t>> MultiPoly::ordered_terms() const {
  std::vector<std::pair<Exponents, std::int64_t>> out(terms_.begin(), terms_.end());
  auto weight = [this](const Exponents& e) {
    long w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(vars_[i].grade) * e[i];
    return w;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    long wa = weight(a.first);
    long wb = weight(b.first);
    if (wa != wb) return wa > wb;
    return a.first > b.first;
  });
  return out;
}

MultiPoly MultiPoly::relabel(std::vector<Variable> vars, std::span<const int> target) const {
  if (target.size() != vars_.size()) throw std::invalid_argument("relabel: target size mismatch");
  for (int t : target) {
    if (t < 0 || t >= static_cast<int>(vars.size())) throw std::invalid_argument("relabel: target out of range");
  }
  MultiPoly out(std::move(vars));
  for (const auto& [exps, coef] : terms_) {
    Exponents e(out.vars_.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[target[i]] += exps[i];
    out.add_term(e, coef);
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational total;
  for (const auto& [exps, coef] : terms_) {
    Rational term(coef);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) term *= power(point[i], exps[i]);
    }
    total += term;
  }
  return total;
}

std::int64_t MultiPoly::coefficient_sum() const {
  std::int64_t total = 0;
  for (const auto& [exps, coef] : terms_) total = checked_add(total, coef);
  return total;
}

std::string MultiPoly::canonical_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, coef] : ordered_terms()) {
    std::ostringstream mono;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      mono << vars_[i].name;
      if (exps[i] > 1) mono << '^' << exps[i];
    }
    const std::string m = mono.str();
    // Magnitude as unsigned so that INT64_MIN renders correctly.
    unsigned long long mag = coef < 0 ? 0ULL - static_cast<unsigned long long>(coef) : coef;
    if (first) {
      if (coef < 0) out << '-';
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    if (m.empty() || mag != 1) out << mag;
    out << m;
    first = false;
  }
  return out.str();
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("polynomials over different variable tuples");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [exps, coef] : rhs.terms_) add_term(exps, coef);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

}  // namespace homtutte
