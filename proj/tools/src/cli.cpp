/*
   Copyright 2026 The hypergeo authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hypergeo/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hypergeo/catalog.hpp"
#include "hypergeo/criterion.hpp"
#include "hypergeo/errors.hpp"
#include "hypergeo/hypotheses.hpp"
#include "hypergeo/monodromy.hpp"
#include "hypergeo/poly.hpp"
#include "hypergeo/witness.hpp"
#include "hypergeo/word.hpp"

namespace hypergeo::cli {

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::HypothesisViolation:
    case ErrorCode::ZeroDifference:
    case ErrorCode::NotMonic: return kHypothesis;
    case ErrorCode::IoError: return kIo;
    default: return kAlgebra;
  }
}

void apply_depth_override(RunConfig& cfg) {
  const char* env = std::getenv("HYPERGEO_MAX_DEPTH");
  if (!env || !*env) return;
  std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
    throw Usage("HYPERGEO_MAX_DEPTH must be a non-negative integer");
  cfg.depth = std::stoi(s);
}

Limits limits_of(const RunConfig& cfg) {
  Limits l;
  l.depth = cfg.depth;
  l.power_bound = cfg.power_bound;
  return l;
}

// Emits text either to stdout or to --output.
void write_out(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot open " + cfg.output);
  file << body;
  file.close();
  if (!file) throw Error(ErrorCode::IoError, "write failed for " + cfg.output);
}

bool want_json(const RunConfig& cfg) {
  if (cfg.format.empty() || cfg.format == "text") return false;
  if (cfg.format == "json") return true;
  throw Usage("unknown format '" + cfg.format + "' (text or json)");
}

json hypotheses_json(const HypothesisReport& r) {
  return {{"monic_f", r.monic_f},         {"monic_g", r.monic_g},
          {"even_degree", r.even_degree}, {"unit_constant", r.unit_constant},
          {"reciprocal_f", r.reciprocal_f}, {"reciprocal_g", r.reciprocal_g},
          {"coprime", r.coprime},         {"primitive_pair", r.primitive_pair},
          {"admissible", r.admissible()}};
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

// Parses the pair and enforces the hypotheses, printing the failing predicates.
std::pair<IntPoly, IntPoly> load_pair(const RunConfig& cfg) {
  if (cfg.f.empty() || cfg.g.empty()) throw Usage("--f and --g are required");
  IntPoly f = parse_poly(cfg.f);
  IntPoly g = parse_poly(cfg.g);
  require_admissible(check_hypotheses(f, g));
  return {f, g};
}

// "auto" picks unit12 when Omega(e1,e2) != 0 and falls back to the primitive vector.
MonodromyData load_group(const IntPoly& f, const IntPoly& g, const std::string& normalization) {
  if (normalization != "auto") return monodromy_pair(f, g, parse_normalization(normalization));
  try {
    return monodromy_pair(f, g, FormNormalization::Unit12);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NormalizationUndefined) throw;
    return monodromy_pair(f, g, FormNormalization::PrimitiveInteger);
  }
}

std::optional<TransvectionTriple> load_triple(const MonodromyData& md, const RunConfig& cfg) {
  if (cfg.search) return extended_triple_search(md, cfg.depth);
  return build_triple(md, difference_profile(md.f, md.g));
}

json angles_json(const std::vector<Rat>& a) {
  json j = json::array();
  for (const auto& x : a) j.push_back(x.str());
  return j;
}

std::string matrix_block(const RatMat& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).str();
    os << "\n";
  }
  return os.str();
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  auto [f, g] = load_pair(cfg);
  const bool as_json = want_json(cfg);
  HypothesisReport hyp = check_hypotheses(f, g);
  DifferenceProfile prof = difference_profile(f, g);
  CatalogRow row = describe_pair(f, g);
  MonodromyData md = load_group(f, g, cfg.normalization);
  Classification computed = classify(f, g, limits_of(cfg));
  Classification overlay = apply_overlay(f, g, computed);

  std::vector<std::string> citations;
  if (!overlay.citation.empty()) citations.push_back(overlay.citation);

  if (as_json) {
    json report = {{"f", render(f)},
                   {"g", render(g)},
                   {"n", md.n},
                   {"hypotheses", hypotheses_json(hyp)},
                   {"h", render(prof.h)},
                   {"c", prof.c.get_str()},
                   {"k", prof.k},
                   {"alpha", angles_json(row.alpha)},
                   {"beta", angles_json(row.beta)},
                   {"omega", {{"normalization", to_string(md.normalization)}, {"entries", to_json(md.omega)}}},
                   {"verdict", to_string(computed.verdict)},
                   {"method", computed.method},
                   {"citations", citations}};
    if (overlay.verdict != computed.verdict) report["known_verdict"] = to_string(overlay.verdict);
    if (computed.certificate) report["certificate"] = to_json(*computed.certificate, computed.verdict, overlay.citation);
    write_out(cfg, report.dump(2) + "\n", out);
    return kOk;
  }

  std::ostringstream os;
  os << "f = " << render(f) << "  (" << render_factored(f) << ")\n";
  os << "g = " << render(g) << "  (" << render_factored(g) << ")\n";
  os << "n = " << md.n << "\n";
  os << "hypotheses: " << (hyp.admissible() ? "ok" : join(hyp.failures(), ", ")) << "\n";
  os << "h = " << render(prof.h) << "\n";
  os << "c = " << prof.c.get_str() << ", k = " << prof.k << "\n";
  os << "alpha = " << format_angles(row.alpha) << "\n";
  os << "beta = " << format_angles(row.beta) << "\n";
  os << "verdict: " << to_string(computed.verdict) << "\n";
  os << "method: " << computed.method << "\n";
  if (computed.certificate) {
    const auto& c = *computed.certificate;
    os << "certificate: " << to_string(c.witness.witness_word);
    if (c.path == "constructive")
      os << " (t = " << c.t.str() << ", m = " << c.m << ", Levi word " << c.sl2_word.str() << ")";
    os << "\n";
    os << matrix_block(c.witness.witness_matrix, "  ");
  }
  if (overlay.verdict != computed.verdict)
    os << "note: known " << to_string(overlay.verdict) << ", " << overlay.citation << "\n";
  else if (!overlay.citation.empty())
    os << "note: " << overlay.citation << "\n";
  write_out(cfg, os.str(), out);
  return kOk;
}

int cmd_form(const RunConfig& cfg, std::ostream& out) {
  auto [f, g] = load_pair(cfg);
  MonodromyData md = load_group(f, g, cfg.normalization);
  if (want_json(cfg)) {
    json j = {{"f", render(f)},
              {"g", render(g)},
              {"n", md.n},
              {"normalization", to_string(md.normalization)},
              {"A", to_json(md.A)},
              {"B", to_json(md.B)},
              {"C", to_json(md.C)},
              {"v", to_json(md.v)},
              {"omega", to_json(md.omega)}};
    write_out(cfg, j.dump(2) + "\n", out);
    return kOk;
  }
  std::ostringstream os;
  os << "normalization: " << to_string(md.normalization) << "\n";
  os << matrix_block(md.omega, "");
  write_out(cfg, os.str(), out);
  return kOk;
}

json triple_json(const TransvectionTriple& t) {
  json cs = json::array();
  for (int i = 0; i < 3; ++i)
    cs.push_back({{"matrix", to_json(t.C[i].matrix)}, {"w", to_json(t.w[i])}, {"mu", to_json(t.C[i].mu)}});
  return {{"origin", to_string(t.origin)},
          {"conjugator", letters_to_string(t.conjugator)},
          {"lambda2", t.lambda2.str()},
          {"transvections", cs}};
}

int cmd_triple(const RunConfig& cfg, std::ostream& out) {
  auto [f, g] = load_pair(cfg);
  MonodromyData md = load_group(f, g, cfg.normalization);
  auto triple = load_triple(md, cfg);
  if (!triple) throw Error(ErrorCode::TripleDegenerate, "no conjugator within depth " + std::to_string(cfg.depth));
  LeviPair levi = levi_matrices(*triple);
  if (want_json(cfg)) {
    json j = triple_json(*triple);
    j["levi_t"] = levi.t.str();
    write_out(cfg, j.dump(2) + "\n", out);
    return kOk;
  }
  std::ostringstream os;
  os << "origin: " << to_string(triple->origin) << ", conjugator " << letters_to_string(triple->conjugator) << "\n";
  os << "Omega(w1,w2) = " << triple->lambda2.str() << ", Levi t = " << levi.t.str() << "\n";
  for (int i = 0; i < 3; ++i) {
    os << "C" << i + 1 << ": w = " << vec_str(triple->w[i]) << ", mu = " << triple->C[i].mu.str() << "\n";
    os << matrix_block(triple->C[i].matrix, "  ");
  }
  write_out(cfg, os.str(), out);
  return kOk;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  auto [f, g] = load_pair(cfg);
  MonodromyData md = load_group(f, g, cfg.normalization);
  auto triple = load_triple(md, cfg);
  if (!triple) throw Error(ErrorCode::TripleDegenerate, "no conjugator within depth " + std::to_string(cfg.depth));
  FlagBasis flag = flag_basis(*triple, md.omega);
  WordEnv env;
  for (int i = 0; i < 3; ++i) env.matrices["C" + std::to_string(i + 1)] = triple->C[i].matrix;
  auto cert = find_unipotent_witness(env, flag, cfg.depth);
  if (want_json(cfg)) {
    json j = {{"flag", to_json(flag)}, {"depth", cfg.depth}};
    j["certificate"] = cert ? to_json(*cert) : json(nullptr);
    write_out(cfg, j.dump(2) + "\n", out);
    return kOk;
  }
  std::ostringstream os;
  os << "flag basis:\n";
  for (const auto& v : flag.vectors) os << "  " << vec_str(v) << "\n";
  os << "lambda1 = " << flag.lambda1.str() << ", lambda2 = " << flag.lambda2.str() << "\n";
  if (cert) {
    os << "witness: " << to_string(cert->witness_word) << "\n";
    os << matrix_block(flag.to_flag(cert->witness_matrix), "  ");
  } else {
    os << "witness: none within depth " << cfg.depth << "\n";
  }
  write_out(cfg, os.str(), out);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto [f, g] = load_pair(cfg);
  if (cfg.word.empty()) throw Usage("--word is required");
  MonodromyData md = load_group(f, g, cfg.normalization);
  WordEnv env;
  env.matrices = {{"A", md.A}, {"B", md.B}, {"C", md.C}};
  for (const auto& text : cfg.lets) {
    auto [name, w] = parse_binding(text);
    env.lets[name] = w;
  }
  Word w = parse_word(cfg.word);
  RatMat m = eval_word(w, env);
  bool identity = m.is_identity();
  if (want_json(cfg)) {
    json j = {{"word", to_string(w)}, {"identity", identity}, {"value", to_json(m)}};
    write_out(cfg, j.dump(2) + "\n", out);
  } else {
    std::string body = identity ? "identity\n" : "non-identity\n" + matrix_block(m, "  ");
    write_out(cfg, body, out);
  }
  return identity ? kOk : kUsage;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  TableFormat fmt = parse_table_format(cfg.format.empty() ? "csv" : cfg.format);
  TableSelection sel = parse_table_selection(cfg.table);
  CatalogOptions opts;
  opts.limits = limits_of(cfg);
  opts.degree = cfg.degree;
  auto rows = select_rows(classify_catalog(opts), sel);
  std::string path = cfg.output;
  if (path.empty()) path = fmt == TableFormat::Csv ? "catalog.csv" : fmt == TableFormat::Json ? "catalog.json" : "catalog.md";
  emit_tables(rows, fmt, path);
  out << "wrote " << rows.size() << " rows to " << path << "\n";
  return kOk;
}

void add_pair(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--f", cfg.f, "first polynomial")->required();
  sub->add_option("--g", cfg.g, "second polynomial")->required();
  sub->add_option("--normalize", cfg.normalization, "form normalization: auto, unit12, primitive");
}

void add_bounds(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--depth", cfg.depth, "word search depth")->check(CLI::NonNegativeNumber);
  sub->add_option("--power-bound", cfg.power_bound, "largest power tried on the third transvection")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Arithmeticity classifier for symplectic hypergeometric groups", "hypergeo"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "classify a pair (f, g)");
  add_pair(classify_cmd, cfg);
  add_bounds(classify_cmd, cfg);
  classify_cmd->add_option("--format", cfg.format, "text or json");
  classify_cmd->add_option("--output", cfg.output, "write the report to a file");

  auto* form_cmd = app.add_subcommand("form", "print the invariant form");
  add_pair(form_cmd, cfg);
  form_cmd->add_option("--format", cfg.format, "text or json");
  form_cmd->add_option("--output", cfg.output, "write to a file");

  auto* triple_cmd = app.add_subcommand("triple", "print the transvection triple");
  add_pair(triple_cmd, cfg);
  add_bounds(triple_cmd, cfg);
  triple_cmd->add_flag("--search", cfg.search, "use the extended conjugator search");
  triple_cmd->add_option("--format", cfg.format, "text or json");
  triple_cmd->add_option("--output", cfg.output, "write to a file");

  auto* witness_cmd = app.add_subcommand("witness", "search for a unipotent radical witness");
  add_pair(witness_cmd, cfg);
  add_bounds(witness_cmd, cfg);
  witness_cmd->add_flag("--search", cfg.search, "use the extended conjugator search");
  witness_cmd->add_option("--format", cfg.format, "text or json");
  witness_cmd->add_option("--output", cfg.output, "write to a file");

  auto* verify_cmd = app.add_subcommand("verify", "evaluate a word in A, B, C and named bindings");
  add_pair(verify_cmd, cfg);
  verify_cmd->add_option("--let", cfg.lets, "NAME=word binding (repeatable)");
  verify_cmd->add_option("--word", cfg.word, "word to evaluate")->required();
  verify_cmd->add_option("--format", cfg.format, "text or json");
  verify_cmd->add_option("--output", cfg.output, "write to a file");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "classify the catalog and write tables");
  add_bounds(enumerate_cmd, cfg);
  enumerate_cmd->add_option("--degree", cfg.degree, "even degree")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", cfg.format, "csv, json or markdown");
  enumerate_cmd->add_option("--table", cfg.table, "all, T1, T2 or T3");
  enumerate_cmd->add_option("--output", cfg.output, "output path");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    apply_depth_override(cfg);
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*form_cmd) return cmd_form(cfg, out);
    if (*triple_cmd) return cmd_triple(cfg, out);
    if (*witness_cmd) return cmd_witness(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out);
    if (*enumerate_cmd) return cmd_enumerate(cfg, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace hypergeo::cli
