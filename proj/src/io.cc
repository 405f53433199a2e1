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

#include "homtutte/io.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

namespace homtutte {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(what + ": missing field \"" + key + "\"");
  return j.at(key);
}

int int_field(const json& j, const char* key, const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer()) throw ParseError(what + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

Rational rational_value(const json& v, const std::string& what) {
  try {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
  throw ParseError(what + ": matrix entry must be an integer or a \"p/q\" string");
}

}  // namespace

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json matrix_to_json(const SparseMatrix& m) {
  std::vector<std::tuple<int, int, std::string>> entries;
  for (int j = 0; j < m.cols(); ++j) {
    for (const auto& [i, v] : m.column(j)) entries.emplace_back(i, j, v.to_string());
  }
  std::sort(entries.begin(), entries.end());
  ordered_json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = ordered_json::array();
  for (const auto& [i, j, v] : entries) out["entries"].push_back(ordered_json::array({i, j, v}));
  return out;
}

SparseMatrix matrix_from_json(const json& j, const std::string& what) {
  const int rows = int_field(j, "rows", what);
  const int cols = int_field(j, "cols", what);
  if (rows < 0 || cols < 0) throw ParseError(what + ": negative dimension");
  const json& entries = field(j, "entries", what);
  if (!entries.is_array()) throw ParseError(what + ": \"entries\" must be an array");
  std::vector<SparseVector> columns(cols);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError(what + ": each entry must be [row, col, value]");
    }
    const int r = e[0].get<int>();
    const int c = e[1].get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      throw ParseError(what + ": entry (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range for " +
                       std::to_string(rows) + "x" + std::to_string(cols));
    }
    columns[c].emplace_back(r, rational_value(e[2], what));
  }
  try {
    return SparseMatrix::from_sparse_columns(rows, std::move(columns));
  } catch (const std::exception& ex) {
    throw ParseError(what + ": " + ex.what());
  }
}

ordered_json simplicial_to_json(const SimplicialComplex& k) {
  ordered_json out;
  out["facets"] = ordered_json::array();
  for (const auto& f : k.facets()) out["facets"].push_back(f);
  return out;
}

SimplicialComplex simplicial_from_json(const json& j) {
  const json& facets = field(j, "facets", "simplicial complex");
  if (!facets.is_array()) throw ParseError("simplicial complex: \"facets\" must be an array");
  std::vector<std::vector<int>> lists;
  for (const auto& f : facets) {
    if (!f.is_array()) throw ParseError("simplicial complex: each facet must be an array of vertices");
    std::vector<int> verts;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw ParseError("simplicial complex: vertices must be integers");
      verts.push_back(v.get<int>());
    }
    lists.push_back(std::move(verts));
  }
  try {
    return SimplicialComplex::from_facets(lists);
  } catch (const std::exception& e) {
    throw ParseError(std::string("simplicial complex: ") + e.what());
  }
}

ordered_json chain_to_json(const ChainComplex& c) {
  ordered_json out;
  out["dims"] = c.dims();
  out["boundaries"] = ordered_json::array();
  for (int k = 1; k <= c.top_dimension(); ++k) out["boundaries"].push_back(matrix_to_json(c.boundary(k)));
  return out;
}

ChainComplex chain_from_json(const json& j) {
  const json& dims_json = field(j, "dims", "chain complex");
  if (!dims_json.is_array() || dims_json.empty()) throw ParseError("chain complex: \"dims\" must be a nonempty array");
  std::vector<int> dims;
  for (const auto& d : dims_json) {
    if (!d.is_number_integer()) throw ParseError("chain complex: dims must be integers");
    dims.push_back(d.get<int>());
  }
  const json& bs = field(j, "boundaries", "chain complex");
  if (!bs.is_array()) throw ParseError("chain complex: \"boundaries\" must be an array");
  std::vector<SparseMatrix> boundaries;
  for (std::size_t k = 0; k < bs.size(); ++k) boundaries.push_back(matrix_from_json(bs[k], "D_" + std::to_string(k + 1)));
  try {
    return ChainComplex(std::move(dims), std::move(boundaries));
  } catch (const std::exception& e) {
    throw ParseError(std::string("chain complex: ") + e.what());
  }
}

ordered_json embedding_to_json(const EmbeddingDatum& e) {
  ordered_json out;
  out["n"] = e.n;
  out["r"] = e.r();
  out["Q"] = matrix_to_json(e.form);
  out["Psi"] = matrix_to_json(e.class_map);
  out["R"] = matrix_to_json(e.cycles);
  out["complex"] = chain_to_json(e.complex);
  return out;
}

EmbeddingDatum embedding_from_json(const json& j) {
  EmbeddingDatum e;
  e.n = int_field(j, "n", "embedding");
  const int r = int_field(j, "r", "embedding");
  e.form = matrix_from_json(field(j, "Q", "embedding"), "Q");
  e.class_map = matrix_from_json(field(j, "Psi", "embedding"), "Psi");
  e.cycles = matrix_from_json(field(j, "R", "embedding"), "R");
  e.complex = chain_from_json(field(j, "complex", "embedding"));
  if (e.form.rows() != r) {
    throw ParseError("embedding: r=" + std::to_string(r) + " but Q has " + std::to_string(e.form.rows()) + " rows");
  }
  try {
    validate_embedding(e);
  } catch (const InvalidDatumError& ex) {
    throw ParseError(std::string("embedding: ") + ex.what());
  }
  return e;
}

ordered_json poly_to_json(const MultiPoly& p) {
  ordered_json out;
  out["vars"] = ordered_json::array();
  for (const auto& v : p.vars()) out["vars"].push_back(v.name);
  out["terms"] = ordered_json::array();
  for (const auto& [exps, coef] : p.ordered_terms()) {
    ordered_json t;
    t["exp"] = exps;
    t["coef"] = std::to_string(coef);
    out["terms"].push_back(std::move(t));
  }
  out["canonical"] = p.canonical_string();
  return out;
}

LoadedInput parse_input(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  LoadedInput in;
  in.digest = fnv1a64_hex(text);
  if (j.contains("facets")) {
    in.schema = Schema::kSimplicial;
    in.simplicial = simplicial_from_json(j);
    in.chain = chain_complex(*in.simplicial);
  } else if (j.contains("Q")) {
    in.schema = Schema::kEmbedding;
    in.embedding = embedding_from_json(j);
    in.chain = in.embedding->complex;
  } else if (j.contains("dims")) {
    in.schema = Schema::kChain;
    in.chain = chain_from_json(j);
  } else {
    throw ParseError("unrecognized input: expected \"facets\", \"dims\" or an embedding datum");
  }
  return in;
}

LoadedInput load_input(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_input(buf.str());
}

}  // namespace homtutte
