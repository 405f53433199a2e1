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

// JSON file formats.
//
//   simplicial  {"facets": [[v, ...], ...]}
//   chain       {"dims": [c_0, ..., c_N],
//                "boundaries": [matrix D_1, ..., matrix D_N]}
//   embedding   {"n": n, "r": r, "Q": matrix, "Psi": matrix, "R": matrix,
//                "complex": chain}
//   matrix      {"rows": R, "cols": C, "entries": [[i, j, "p/q"], ...]}
//   polynomial  {"vars": [...], "terms": [{"exp": [...], "coef": "c"}, ...],
//                "canonical": "..."}
//
// Matrix entries are written row-major and values as canonical rational
// strings, so serialization is byte-deterministic.

#ifndef HOMTUTTE_IO_H_
#define HOMTUTTE_IO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "homtutte/complexes.h"
#include "homtutte/embedding.h"
#include "homtutte/multipoly.h"

namespace homtutte {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Schema { kSimplicial, kChain, kEmbedding };

struct LoadedInput {
  Schema schema = Schema::kChain;
  std::optional<SimplicialComplex> simplicial;
  ChainComplex chain;  // always set; the datum's complex for embeddings
  std::optional<EmbeddingDatum> embedding;
  std::string digest;  // FNV-1a 64 of the raw bytes, hex
};

// Throws ParseError with the offending field in the message.
LoadedInput parse_input(std::string_view text);
LoadedInput load_input(const std::string& path);

nlohmann::ordered_json matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const nlohmann::json& j, const std::string& what);

nlohmann::ordered_json simplicial_to_json(const SimplicialComplex& k);
SimplicialComplex simplicial_from_json(const nlohmann::json& j);

nlohmann::ordered_json chain_to_json(const ChainComplex& c);
ChainComplex chain_from_json(const nlohmann::json& j);

nlohmann::ordered_json embedding_to_json(const EmbeddingDatum& e);
EmbeddingDatum embedding_from_json(const nlohmann::json& j);

nlohmann::ordered_json poly_to_json(const MultiPoly& p);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace homtutte

#endif  // HOMTUTTE_IO_H_
