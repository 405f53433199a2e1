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

#ifndef HOMTUTTE_MULTIPOLY_H_
#define HOMTUTTE_MULTIPOLY_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "homtutte/rational.h"

namespace homtutte {

// A polynomial variable. `grade` is +1 for the primal variables (X, A, A+,
// A-) and -1 for their duals (Y, B, B+, B-); the canonical term order sorts
// by the graded weight sum(grade * exponent), highest first.
struct Variable {
  std::string name;
  int grade = 1;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Sparse polynomial with int64 coefficients over a fixed variable tuple.
// Arithmetic is overflow-checked (std::overflow_error).
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<Variable> vars);

  // (X, Y)
  static MultiPoly tutte_ring();
  // (X, Y, A, B)
  static MultiPoly embedding_ring();
  // (X, Y, A+, A-, B+, B-)
  static MultiPoly signed_embedding_ring();

  const std::vector<Variable>& vars() const { return vars_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, std::int64_t coef);
  std::int64_t coefficient(const Exponents& exps) const;

  // Terms sorted in canonical (rendering) order.
  std::vector<std::pair<Exponents, std::int64_t>> ordered_terms() const;

  // Re-expresses the polynomial over `vars`: old variable i becomes new
  // variable target[i]. Swapping X and Y is relabel(vars(), {1, 0}).
  MultiPoly relabel(std::vector<Variable> vars, std::span<const int> target) const;
  MultiPoly swapped(std::span<const int> target) const { return relabel(vars_, target); }

  Rational evaluate(std::span<const Rational> point) const;
  std::int64_t coefficient_sum() const;

  // Deterministic rendering, e.g. "X^2 + 3X + 3 + Y", "A^2 + 2 + B^2".
  std::string canonical_string() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void check_compatible(const MultiPoly& other) const;

  std::vector<Variable> vars_;
  std::map<Exponents, std::int64_t> terms_;
};

}  // namespace homtutte

#endif  // HOMTUTTE_MULTIPOLY_H_
