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

#include "hypergeo/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "hypergeo/errors.hpp"

namespace hypergeo {

namespace {

const char* kBravThomas = "Brav-Thomas, Thin monodromy in Sp(4), Compositio Math. 150 (2014)";
const char* kWorkedExample = "explicit unipotent witness (worked example), re-derived by the classifier";

IntPoly phi_product(std::initializer_list<std::pair<unsigned, unsigned>> factors) {
  IntPoly p = IntPoly::constant(1);
  for (auto [m, e] : factors) p *= cyclotomic(m).pow(e);
  return p;
}

}  // namespace

const std::vector<KnownResult>& known_results() {
  static const std::vector<KnownResult> table = [] {
    const IntPoly f = phi_product({{1, 4}});
    using K = KnownResult::Kind;
    std::vector<KnownResult> t;
    for (const IntPoly& g : {phi_product({{2, 4}}), phi_product({{2, 2}, {3, 1}}), phi_product({{2, 2}, {4, 1}}),
                             phi_product({{5, 1}}), phi_product({{2, 2}, {6, 1}}), phi_product({{8, 1}}),
                             phi_product({{12, 1}})})
      t.push_back({f, g, K::ThinBT, kBravThomas});
    for (const IntPoly& g : {phi_product({{6, 2}}), phi_product({{4, 1}, {6, 1}}), phi_product({{10, 1}})})
      t.push_back({f, g, K::ArithmeticExplicit, kWorkedExample});
    return t;
  }();
  return table;
}

std::optional<KnownResult> lookup_known(const IntPoly& f, const IntPoly& g) {
  for (const auto& k : known_results())
    if ((k.f == f && k.g == g) || (k.f == g && k.g == f)) return k;
  return std::nullopt;
}

std::vector<IntPoly> admissible_products(int degree) {
  if (degree <= 0 || degree % 2 != 0) return {};
  const auto d = static_cast<unsigned>(degree);
  std::vector<unsigned> ms;
  for (unsigned m = 1; m <= 2 * d * d + 2; ++m)
    if (euler_phi(m) <= d) ms.push_back(m);

  std::vector<IntPoly> out;
  std::vector<unsigned> chosen;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t start, unsigned left) {
    if (left == 0) {
      if (std::count(chosen.begin(), chosen.end(), 1U) % 2 != 0) return;
      IntPoly p = IntPoly::constant(1);
      for (unsigned m : chosen) p *= cyclotomic(m);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t i = start; i < ms.size(); ++i) {
      unsigned ph = euler_phi(ms[i]);
      if (ph > left) continue;
      chosen.push_back(ms[i]);
      rec(i, left - ph);
      chosen.pop_back();
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), coeff_less);
  return out;
}

std::vector<std::pair<IntPoly, IntPoly>> enumerate_pairs(int degree) {
  std::vector<IntPoly> ps = admissible_products(degree);
  std::vector<std::pair<IntPoly, IntPoly>> out;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (check_hypotheses(ps[i], ps[j]).admissible()) out.emplace_back(ps[i], ps[j]);
  return out;
}

CatalogRow describe_pair(const IntPoly& f, const IntPoly& g) {
  CatalogRow r;
  r.f = f;
  r.g = g;
  if (cyclotomic_factorization(f)) r.alpha = root_angles(f);
  if (cyclotomic_factorization(g)) r.beta = root_angles(g);
  r.diff = f - g;
  r.c = r.diff.leading();
  r.table = abs(r.c) <= 2 ? TableTag::T1 : TableTag::T2;
  const IntPoly base = phi_product({{1, static_cast<unsigned>(std::max(f.degree(), 0))}});
  r.t3 = f.degree() == 4 && (f == base || g == base);
  return r;
}

Classification apply_overlay(const IntPoly& f, const IntPoly& g, Classification computed) {
  auto known = lookup_known(f, g);
  if (!known) return computed;
  if (known->kind == KnownResult::Kind::ThinBT) {
    if (computed.verdict == Verdict::Undetermined) {
      computed.verdict = Verdict::KnownThin;
      computed.method = "known result; computed: " + computed.method;
    }
  }
  computed.citation = known->citation;
  return computed;
}

std::vector<CatalogRow> classify_catalog(const CatalogOptions& opts) {
  auto pairs = enumerate_pairs(opts.degree);
  std::vector<CatalogRow> rows(pairs.size());
  auto work = [&](std::size_t i) {
    CatalogRow r = describe_pair(pairs[i].first, pairs[i].second);
    r.index = static_cast<int>(i) + 1;
    Classification c;
    try {
      c = classify(r.f, r.g, opts.limits);
    } catch (const Error& e) {
      c.verdict = Verdict::Undetermined;
      c.method = std::string("error: ") + e.what();
    }
    r.computed = c.verdict;
    r.classification = apply_overlay(r.f, r.g, std::move(c));
    rows[i] = std::move(r);
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  if (threads <= 1) {
    for (std::size_t i = 0; i < pairs.size(); ++i) work(i);
    return rows;
  }
  // Strided partition; each task writes only its own slots, so the merge is the vector itself.
  std::vector<std::future<void>> tasks;
  for (unsigned t = 0; t < threads; ++t)
    tasks.push_back(std::async(std::launch::async, [&, t] {
      for (std::size_t i = t; i < pairs.size(); i += threads) work(i);
    }));
  for (auto& f : tasks) f.get();
  return rows;
}

std::vector<CatalogRow> classify_catalog(const Limits& limits) {
  CatalogOptions o;
  o.limits = limits;
  return classify_catalog(o);
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::Csv;
  if (text == "json") return TableFormat::Json;
  if (text == "markdown" || text == "md") return TableFormat::Markdown;
  throw Error(ErrorCode::ParseError, "unknown table format '" + std::string(text) + "'");
}

TableSelection parse_table_selection(std::string_view text) {
  if (text == "all") return TableSelection::All;
  if (text == "T1") return TableSelection::T1;
  if (text == "T2") return TableSelection::T2;
  if (text == "T3") return TableSelection::T3;
  throw Error(ErrorCode::ParseError, "unknown table '" + std::string(text) + "'");
}

std::vector<CatalogRow> select_rows(const std::vector<CatalogRow>& rows, TableSelection sel) {
  std::vector<CatalogRow> out;
  for (const auto& r : rows) {
    bool keep = sel == TableSelection::All || (sel == TableSelection::T1 && r.table == TableTag::T1) ||
                (sel == TableSelection::T2 && r.table == TableTag::T2) || (sel == TableSelection::T3 && r.t3);
    if (keep) out.push_back(r);
  }
  return out;
}

std::string format_angles(const std::vector<Rat>& a) {
  std::string s;
  for (const auto& x : a) s += (s.empty() ? "" : " ") + x.str();
  return s;
}

std::string table_tags(const CatalogRow& row) {
  std::string s = row.table == TableTag::T1 ? "T1" : "T2";
  if (row.t3) s += ";T3";
  return s;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

}  // namespace

std::string render_csv(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  os << "No.,f,g,alpha,beta,f-g,verdict,method,tags,citation\n";
  for (const auto& r : rows) {
    os << r.index << ',' << csv_field(render(r.f)) << ',' << csv_field(render(r.g)) << ','
       << csv_field(format_angles(r.alpha)) << ',' << csv_field(format_angles(r.beta)) << ','
       << csv_field(render(r.diff)) << ',' << to_string(r.classification.verdict) << ','
       << csv_field(r.classification.method) << ',' << table_tags(r) << ','
       << csv_field(r.classification.citation) << '\n';
  }
  return os.str();
}

std::string render_markdown(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  os << "| No. | f | g | alpha | beta | f-g | verdict | method |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.index << " | " << render(r.f) << " | " << render(r.g) << " | "
       << format_angles(r.alpha) << " | " << format_angles(r.beta) << " | " << render(r.diff) << " | "
       << to_string(r.classification.verdict) << " | " << md_cell(r.classification.method) << " |\n";
  }
  return os.str();
}

nlohmann::json render_json(const std::vector<CatalogRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json alpha = nlohmann::json::array(), beta = nlohmann::json::array();
    for (const auto& a : r.alpha) alpha.push_back(a.str());
    for (const auto& b : r.beta) beta.push_back(b.str());
    nlohmann::json tags = nlohmann::json::array({r.table == TableTag::T1 ? "T1" : "T2"});
    if (r.t3) tags.push_back("T3");
    nlohmann::json row = {{"no", r.index},
                          {"f", render(r.f)},
                          {"g", render(r.g)},
                          {"alpha", alpha},
                          {"beta", beta},
                          {"diff", render(r.diff)},
                          {"c", r.c.get_str()},
                          {"verdict", to_string(r.classification.verdict)},
                          {"computed_verdict", to_string(r.computed)},
                          {"method", r.classification.method},
                          {"tags", tags},
                          {"citation", r.classification.citation}};
    if (r.classification.certificate)
      row["certificate"] = to_json(*r.classification.certificate, r.classification.verdict,
                                   r.classification.citation);
    arr.push_back(std::move(row));
  }
  return arr;
}

void emit_tables(const std::vector<CatalogRow>& rows, TableFormat format, const std::filesystem::path& path) {
  std::string body;
  switch (format) {
    case TableFormat::Csv: body = render_csv(rows); break;
    case TableFormat::Markdown: body = render_markdown(rows); break;
    case TableFormat::Json: body = render_json(rows).dump(2) + "\n"; break;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  out << body;
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      rec.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        rec.push_back(std::move(field));
        records.push_back(std::move(rec));
      }
      rec.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quoted CSV field");
  if (any || !field.empty()) {
    rec.push_back(std::move(field));
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace hypergeo
