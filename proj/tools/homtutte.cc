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

// homtutte: homological Tutte polynomials and their embedding refinements.
//
// stdout carries one JSON document per run; a short human summary goes to
// stderr. Exit codes: 0 ok, 1 verification failure, 2 bad input,
// 3 enumeration cap exceeded, 4 signed polynomial with odd n,
// 5 input is not a closed orientable manifold.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homtutte/complexes.h"
#include "homtutte/embedding.h"
#include "homtutte/io.h"
#include "homtutte/matroid.h"
#include "homtutte/pairing.h"
#include "homtutte/tutte.h"
#include "homtutte/verify.h"

namespace {

using homtutte::MultiPoly;
using homtutte::Rational;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitOddDimension = 4;
constexpr int kExitNotOrientable = 5;

struct Flags {
  std::string input;
  std::optional<int> n;
  int cap = 24;
  int jobs = 0;
  std::string output;
  bool pbar = false;
  bool flip = false;
  std::string suite;
  std::string count_kind;
};

class Run {
 public:
  explicit Run(std::string command) : start_(std::chrono::steady_clock::now()) { report_["command"] = command; }

  void set_input(const homtutte::LoadedInput& in) { report_["input_digest"] = in.digest; }
  void add_poly(const std::string& key, const MultiPoly& p) { polys_[key] = homtutte::poly_to_json(p); }
  void add_value(const std::string& key, ordered_json v) { values_[key] = std::move(v); }
  void add_subsets(std::uint64_t k) { subsets_ += k; }
  void add_checks(const homtutte::VerifyReport& r) {
    for (const auto& c : r.checks) {
      ordered_json j;
      j["name"] = c.name;
      j["passed"] = c.passed;
      if (!c.detail.empty()) j["detail"] = c.detail;
      if (c.counterexample) j["counterexample"] = *c.counterexample;
      checks_.push_back(std::move(j));
    }
    subsets_ += r.subsets;
  }

  // Serializes the report. wall_time_ms is the only field that varies
  // between identical runs.
  std::string finish() {
    if (!polys_.empty()) report_["polynomials"] = polys_;
    if (!values_.empty()) report_["values"] = values_;
    report_["checks"] = checks_;
    report_["subset_count"] = subsets_;
    auto elapsed = std::chrono::steady_clock::now() - start_;
    report_["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    return report_.dump(2);
  }

 private:
  std::chrono::steady_clock::time_point start_;
  ordered_json report_;
  ordered_json polys_ = ordered_json::object();
  ordered_json values_ = ordered_json::object();
  ordered_json checks_ = ordered_json::array();
  std::uint64_t subsets_ = 0;
};

homtutte::SweepOptions sweep_options(const Flags& f) {
  homtutte::SweepOptions opts;
  opts.cap_log2 = f.cap;
  opts.jobs = f.jobs;
  return opts;
}

// Middle dimension when --n is absent: the datum's own n, else floor(N/2)
// clamped to at least 1.
int resolve_n(const Flags& f, const homtutte::LoadedInput& in) {
  int n = 0;
  if (f.n) {
    n = *f.n;
  } else if (in.embedding) {
    n = in.embedding->n;
  } else {
    n = std::max(1, in.chain.top_dimension() / 2);
  }
  if (n < 1 || n > in.chain.top_dimension()) {
    throw homtutte::ParseError("--n " + std::to_string(n) + " outside [1, " + std::to_string(in.chain.top_dimension()) +
                               "]");
  }
  return n;
}

// Embedding suites and commands accept a simplicial triangulation as well;
// the pairing is then extracted from it.
homtutte::EmbeddingDatum require_embedding(const homtutte::LoadedInput& in, bool flip) {
  if (in.embedding) return flip ? homtutte::flip_orientation(*in.embedding) : *in.embedding;
  if (in.simplicial) {
    const int top = in.simplicial->dimension();
    if (top < 2 || top % 2 != 0) {
      throw homtutte::ParseError("an embedding datum or an even-dimensional triangulation is required");
    }
    return homtutte::build_embedding(*in.simplicial, top / 2, flip);
  }
  throw homtutte::ParseError("an embedding datum or a simplicial triangulation is required");
}

std::string two_value(const Rational& v) { return v.to_string(); }

void emit_document(const Flags& f, Run& run, const ordered_json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (f.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.output, std::ios::binary);
  if (!out) throw homtutte::ParseError("cannot write " + f.output);
  out << text;
  run.add_value("output", f.output);
  std::cout << run.finish() << "\n";
}

int cmd_tutte(const Flags& f) {
  Run run("tutte");
  auto in = homtutte::load_input(f.input);
  run.set_input(in);
  const int n = resolve_n(f, in);
  MultiPoly t = homtutte::tutte_homological(in.chain, n, sweep_options(f));
  run.add_poly("T", t);
  run.add_subsets(std::uint64_t{1} << in.chain.cell_count(n));
  const Rational zero[] = {0, 0};
  const Rational one[] = {1, 1};
  run.add_value("n", n);
  run.add_value("T(0,0)", two_value(t.evaluate(zero)));
  run.add_value("T(1,1)", two_value(t.evaluate(one)));
  std::cout << run.finish() << "\n";
  std::cerr << "T^" << n << " = " << t.canonical_string() << "\n"
            << "spanning-tree evaluation T(0,0) = " << t.evaluate(zero).to_string() << "\n"
            << "T(1,1) = " << t.evaluate(one).to_string() << "\n";
  return kExitOk;
}

int cmd_matroid_tutte(const Flags& f) {
  Run run("matroid-tutte");
  auto in = homtutte::load_input(f.input);
  run.set_input(in);
  const int n = resolve_n(f, in);
  MultiPoly t = homtutte::matroid_tutte(homtutte::simplicial_matroid(in.chain, n), sweep_options(f));
  run.add_poly("T", t);
  run.add_subsets(std::uint64_t{1} << in.chain.cell_count(n));
  run.add_value("n", n);
  std::cout << run.finish() << "\n";
  std::cerr << "matroid T^" << n << " = " << t.canonical_string() << "\n";
  return kExitOk;
}

int cmd_p(const Flags& f) {
  Run run(f.pbar ? "p --pbar" : "p");
  auto in = homtutte::load_input(f.input);
  run.set_input(in);
  homtutte::EmbeddingDatum e = require_embedding(in, f.flip);
  const auto opts = sweep_options(f);
  MultiPoly p = f.pbar ? homtutte::poly_Pbar(e, opts) : homtutte::poly_P(e, opts);
  const std::string key = f.pbar ? "Pbar" : "P";
  run.add_poly(key, p);
  run.add_subsets(std::uint64_t{1} << e.cells());
  run.add_value("n", e.n);
  run.add_value("r", e.r());
  std::cout << run.finish() << "\n";
  std::cerr << key << " = " << p.canonical_string() << "\n";
  return kExitOk;
}

ordered_json determinant_json(const homtutte::SparseMatrix& q) {
  // |det Q| by exact elimination on a dense copy.
  auto rows = q.to_dense();
  const int r = static_cast<int>(rows.size());
  Rational det = 1;
  for (int c = 0; c < r; ++c) {
    int p = c;
    while (p < r && rows[p][c].is_zero()) ++p;
    if (p == r) return "0";
    if (p != c) std::swap(rows[p], rows[c]);
    det *= rows[c][c];
    for (int i = c + 1; i < r; ++i) {
      if (rows[i][c].is_zero()) continue;
      Rational factor = rows[i][c] / rows[c][c];
      for (int j = c; j < r; ++j) rows[i][j] -= factor * rows[c][j];
    }
  }
  return det.abs().to_string();
}

int cmd_pairing(const Flags& f) {
  Run run("pairing");
  auto in = homtutte::load_input(f.input);
  run.set_input(in);
  if (!in.simplicial) throw homtutte::ParseError("pairing needs a simplicial complex (\"facets\")");
  const int top = in.simplicial->dimension();
  if (top < 2 || top % 2 != 0) {
    throw homtutte::ParseError("pairing needs an even-dimensional triangulation, got dimension " + std::to_string(top));
  }
  homtutte::EmbeddingDatum e;
  try {
    e = homtutte::build_embedding(*in.simplicial, top / 2, f.flip);
  } catch (const homtutte::InvalidDatumError& ex) {
    throw homtutte::NotOrientableError(ex.what());
  }
  const std::string symmetry = e.r() == 0 ? "empty" : (e.n % 2 == 0 ? "symmetric" : "antisymmetric");
  const std::string det = determinant_json(e.form).get<std::string>();
  run.add_value("n", e.n);
  run.add_value("r", e.r());
  run.add_value("symmetry", symmetry);
  run.add_value("abs_det_Q", det);
  std::cerr << "r=" << e.r() << ", " << symmetry << ", |det Q|=" << det << "\n";
  emit_document(f, run, homtutte::embedding_to_json(e));
  return kExitOk;
}

int cmd_dualize(const Flags& f) {
  Run run("dualize");
  auto in = homtutte::load_input(f.input);
  run.set_input(in);
  ordered_json doc;
  if (in.embedding) {
    doc = homtutte::embedding_to_json(homtutte::dual_embedding(*in.embedding));
    std::cerr << "dual embedding datum, n=" << in.embedding->n << ", r=" << in.embedding->r() << "\n";
  } else {
    homtutte::ChainComplex dual = homtutte::algebraic_dual(in.chain);
    doc = homtutte::chain_to_json(dual);
    std::cerr << "dual chain complex, dims";
    for (int d : dual.dims()) std::cerr << " " << d;
    std::cerr << "\n";
  }
  emit_document(f, run, doc);
  return kExitOk;
}

int cmd_verify(const Flags& f) {
  Run run("verify " + f.suite);
  auto in = homtutte::load_input(f.input);
  run.set_input(in);
  const auto opts = sweep_options(f);
  homtutte::VerifyReport report;
  if (f.suite == "sphere-t") {
    report = homtutte::verify_sphere_t(in.chain, opts);
  } else if (f.suite == "matroid") {
    report = homtutte::verify_matroid(in.chain, opts);
  } else {
    homtutte::EmbeddingDatum e = require_embedding(in, f.flip);
    if (f.suite == "p-duality") {
      report = homtutte::verify_p_duality(e, opts);
    } else if (f.suite == "identities") {
      report = homtutte::verify_identities(e, opts);
    } else {
      report = homtutte::verify_specialize(e, opts);
    }
  }
  run.add_checks(report);
  std::cout << run.finish() << "\n";
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "pass  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) std::cerr << "  [" << c.detail << "]";
    std::cerr << "\n";
  }
  std::cerr << f.suite << ": " << (report.passed() ? "pass" : "FAIL") << "\n";
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_count(const Flags& f) {
  Run run("count " + f.count_kind);
  auto in = homtutte::load_input(f.input);
  run.set_input(in);
  const auto opts = sweep_options(f);
  if (f.count_kind == "spanning-trees") {
    const int n = resolve_n(f, in);
    MultiPoly t = homtutte::tutte_homological(in.chain, n, opts);
    const Rational zero[] = {0, 0};
    const std::string value = t.evaluate(zero).to_string();
    run.add_subsets(std::uint64_t{1} << in.chain.cell_count(n));
    run.add_value("n", n);
    run.add_value("T(0,0)", value);
    std::cout << run.finish() << "\n";
    std::cerr << "spanning-tree evaluation T(0,0) = " << value << "\n";
  } else {
    homtutte::EmbeddingDatum e = require_embedding(in, f.flip);
    const std::int64_t flat = homtutte::count_flat_subcomplexes(e, opts);
    run.add_subsets(std::uint64_t{1} << e.cells());
    run.add_value("P(1,1,0,1)", std::to_string(flat));
    std::cout << run.finish() << "\n";
    std::cerr << "flat subcomplexes P(1,1,0,1) = " << flat << "\n";
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Flags& f, bool with_n) {
  cmd->add_option("input", f.input, "input JSON file")->required();
  if (with_n) cmd->add_option("--n", f.n, "homological degree n");
  cmd->add_option("--cap", f.cap, "refuse enumerations above 2^cap subsets")->check(CLI::Range(1, 62));
  cmd->add_option("--jobs", f.jobs, "worker threads (0 = all available)")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological Tutte polynomials and embedding invariants"};
  app.require_subcommand(1);
  Flags f;

  auto* tutte = app.add_subcommand("tutte", "homological Tutte polynomial T^n of a complex");
  add_common(tutte, f, true);

  auto* p = app.add_subcommand("p", "embedding polynomial P, or the signed refinement with --pbar");
  add_common(p, f, false);
  p->add_flag("--pbar", f.pbar, "signed polynomial (even n only)");
  p->add_flag("--flip-orientation", f.flip, "negate the intersection form first");

  auto* pairing = app.add_subcommand("pairing", "extract an embedding datum from a triangulated manifold");
  add_common(pairing, f, false);
  pairing->add_flag("--flip-orientation", f.flip, "reverse the fundamental cycle");
  pairing->add_option("-o,--output", f.output, "write the datum here and the run report to stdout");

  auto* dualize = app.add_subcommand("dualize", "algebraic dual complex or dual embedding datum");
  add_common(dualize, f, false);
  dualize->add_option("-o,--output", f.output, "write the dual here and the run report to stdout");

  auto* verify = app.add_subcommand("verify", "exhaustive check of a duality law or identity");
  verify->add_option("suite", f.suite, "sphere-t | matroid | p-duality | identities | specialize")
      ->required()
      ->check(CLI::IsMember({"sphere-t", "matroid", "p-duality", "identities", "specialize"}));
  add_common(verify, f, false);
  verify->add_flag("--flip-orientation", f.flip, "negate the intersection form first");

  auto* matroid = app.add_subcommand("matroid-tutte", "Tutte polynomial of the simplicial matroid by its rank function");
  add_common(matroid, f, true);

  auto* count = app.add_subcommand("count", "spanning-trees = T(0,0), flat = P(1,1,0,1)");
  count->add_option("kind", f.count_kind, "spanning-trees | flat")
      ->required()
      ->check(CLI::IsMember({"spanning-trees", "flat"}));
  add_common(count, f, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*tutte) return cmd_tutte(f);
    if (*p) return cmd_p(f);
    if (*pairing) return cmd_pairing(f);
    if (*dualize) return cmd_dualize(f);
    if (*verify) return cmd_verify(f);
    if (*matroid) return cmd_matroid_tutte(f);
    if (*count) return cmd_count(f);
  } catch (const homtutte::CapExceededError& e) {
    std::cerr << "error: " << e.what() << " (raise --cap to allow it)\n";
    return kExitCap;
  } catch (const homtutte::OddDimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOddDimension;
  } catch (const homtutte::NotOrientableError& e) {
    std::cerr << "error: not closed orientable: " << e.what() << "\n";
    return kExitNotOrientable;
  } catch (const homtutte::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
