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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "hypergeo/catalog.hpp"
#include "oracles.hpp"
#include "worked_examples.hpp"

using namespace hypergeo;
namespace ts = hypergeo::test_support;

namespace {

std::vector<std::vector<std::string>> load_fixture(const std::string& name) {
  std::ifstream in(ts::fixture_path(name), std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  auto recs = parse_csv(ss.str());
  EXPECT_FALSE(recs.empty()) << name;
  recs.erase(recs.begin());
  return recs;
}

std::vector<Rat> angles(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(Rat::parse(tok));
  return out;
}

IntPoly from_array(const std::array<long, 5>& a) {
  std::vector<BigInt> c;
  for (long x : a) c.emplace_back(x);
  return IntPoly(c);
}

unsigned max_index(const IntPoly& p) {
  auto fac = cyclotomic_factorization(p);
  return fac ? *std::max_element(fac->begin(), fac->end()) : 0;
}

// Catalog rows in canonical order, unclassified.
const std::vector<CatalogRow>& described() {
  static const std::vector<CatalogRow> rows = [] {
    std::vector<CatalogRow> out;
    int i = 0;
    for (const auto& [f, g] : enumerate_pairs(4)) {
      out.push_back(describe_pair(f, g));
      out.back().index = ++i;
    }
    return out;
  }();
  return rows;
}

// Checks one printed-table fixture against the catalog; returns the number of matched rows.
int compare_table(const std::string& file, TableTag tag) {
  int matched = 0;
  for (const auto& rec : load_fixture(file)) {
    EXPECT_EQ(rec.size(), 7u);
    const std::size_t no = std::stoul(rec[6]);
    EXPECT_GE(no, 1u);
    EXPECT_LE(no, described().size());
    const CatalogRow& row = described()[no - 1];
    EXPECT_EQ(row.table, tag) << file << " row " << rec[0];
    IntPoly f = parse_poly(rec[1]), g = parse_poly(rec[2]), diff = parse_poly(rec[5]);
    std::vector<Rat> alpha = angles(rec[3]), beta = angles(rec[4]);
    // The printed orientation puts the smaller largest cyclotomic index first.
    EXPECT_LT(max_index(f), max_index(g)) << file << " row " << rec[0];
    const bool swapped = !(f == row.f);
    if (swapped) {
      std::swap(f, g);
      std::swap(alpha, beta);
      diff = IntPoly() - diff;
    }
    EXPECT_EQ(render(f), render(row.f)) << file << " row " << rec[0];
    EXPECT_EQ(render(g), render(row.g)) << file << " row " << rec[0];
    EXPECT_EQ(alpha, row.alpha) << file << " row " << rec[0];
    EXPECT_EQ(beta, row.beta) << file << " row " << rec[0];
    EXPECT_EQ(render(diff), render(row.diff)) << file << " row " << rec[0];
    EXPECT_EQ(diff, row.f - row.g);
    ++matched;
  }
  return matched;
}

}  // namespace

TEST(Enumeration, ProductsMatchKroneckerOracle) {
  auto products = admissible_products(4);
  auto oracle = ts::brute_force_quartics();
  ASSERT_EQ(products.size(), 19u);
  ASSERT_EQ(oracle.size(), products.size());
  for (std::size_t i = 0; i < products.size(); ++i) EXPECT_EQ(products[i], from_array(oracle[i]));
}

TEST(Enumeration, PairsMatchResultantOracle) {
  auto pairs = enumerate_pairs(4);
  auto oracle = ts::brute_force_pairs();
  ASSERT_EQ(pairs.size(), 111u);
  ASSERT_EQ(oracle.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    EXPECT_EQ(pairs[i].first, from_array(oracle[i].first)) << i;
    EXPECT_EQ(pairs[i].second, from_array(oracle[i].second)) << i;
  }
}

TEST(Enumeration, SliceSizes) {
  int t1 = 0, t2 = 0, t3 = 0;
  for (const auto& r : described()) {
    if (r.table == TableTag::T1) {
      ++t1;
      EXPECT_LE(abs(r.c), 2);
    } else {
      ++t2;
      EXPECT_GE(abs(r.c), 3);
    }
    t3 += r.t3;
  }
  EXPECT_EQ(t1, 60);
  EXPECT_EQ(t2, 51);
  EXPECT_EQ(t3, 14);
}

TEST(Fixtures, TableOneMatchesBitExactly) {
  EXPECT_EQ(compare_table("table1.csv", TableTag::T1), 60);
}

TEST(Fixtures, TableTwoMatchesBitExactly) {
  EXPECT_EQ(compare_table("table2.csv", TableTag::T2), 51);
}

TEST(Fixtures, CatalogNumbersFormAPermutation) {
  std::vector<int> seen;
  for (const char* file : {"table1.csv", "table2.csv"})
    for (const auto& rec : load_fixture(file)) seen.push_back(std::stoi(rec[6]));
  std::sort(seen.begin(), seen.end());
  ASSERT_EQ(seen.size(), 111u);
  for (int i = 0; i < 111; ++i) EXPECT_EQ(seen[static_cast<std::size_t>(i)], i + 1);
}

TEST(Fixtures, TableThreeVerdicts) {
  const IntPoly f = parse_poly("(X-1)^4");
  std::map<std::string, int> counts;
  auto recs = load_fixture("table3.csv");
  ASSERT_EQ(recs.size(), 14u);
  for (const auto& rec : recs) {
    const CatalogRow& row = described()[std::stoul(rec[5]) - 1];
    ASSERT_TRUE(row.t3);
    IntPoly g = parse_poly(rec[1]);
    EXPECT_TRUE((row.f == f && row.g == g) || (row.f == g && row.g == f)) << rec[0];
    EXPECT_EQ(f - g, parse_poly(rec[3])) << rec[0];
    std::vector<Rat> beta = angles(rec[2]);
    std::sort(beta.begin(), beta.end());
    EXPECT_EQ(beta, row.f == f ? row.beta : row.alpha) << rec[0];

    Classification computed = classify(row.f, row.g, Limits{});
    Classification c = apply_overlay(row.f, row.g, computed);
    const std::string& printed = rec[4];
    if (printed == "Yes") {
      EXPECT_TRUE(c.verdict == Verdict::ArithmeticThm1 || c.verdict == Verdict::ArithmeticCertificate) << rec[0];
    } else if (printed == "No") {
      EXPECT_EQ(c.verdict, Verdict::KnownThin) << rec[0];
      EXPECT_EQ(computed.verdict, Verdict::Undetermined) << rec[0];
    } else {
      EXPECT_EQ(printed, "?");
      EXPECT_EQ(c.verdict, Verdict::Undetermined) << rec[0];
    }
    if (c.certificate) {
      EXPECT_TRUE(recheck_certificate(*c.certificate)) << rec[0];
    }
    ++counts[to_string(c.verdict)];
  }
  EXPECT_EQ(counts["ArithmeticThm1"], 1);
  EXPECT_EQ(counts["ArithmeticCertificate"], 2);
  EXPECT_EQ(counts["KnownThin"], 7);
  EXPECT_EQ(counts["Undetermined"], 4);
}

TEST(KnownResults, TableAndLookup) {
  int thin = 0, arith = 0;
  for (const auto& k : known_results()) {
    (k.kind == KnownResult::Kind::ThinBT ? thin : arith)++;
    EXPECT_FALSE(k.citation.empty());
  }
  EXPECT_EQ(thin, 7);
  EXPECT_EQ(arith, 3);
  IntPoly f = parse_poly("(X-1)^4"), g = parse_poly("Phi5");
  ASSERT_TRUE(lookup_known(f, g).has_value());
  ASSERT_TRUE(lookup_known(g, f).has_value());
  EXPECT_EQ(lookup_known(g, f)->kind, KnownResult::Kind::ThinBT);
  EXPECT_FALSE(lookup_known(f, parse_poly("Phi3*Phi4")).has_value());
}

TEST(Overlay, NeverDowngradesACertificate) {
  IntPoly f = parse_poly("(X-1)^4");
  Classification cert;
  cert.verdict = Verdict::ArithmeticCertificate;
  EXPECT_EQ(apply_overlay(f, parse_poly("Phi5"), cert).verdict, Verdict::ArithmeticCertificate);
  Classification und;
  Classification thin = apply_overlay(f, parse_poly("Phi5"), und);
  EXPECT_EQ(thin.verdict, Verdict::KnownThin);
  EXPECT_FALSE(thin.citation.empty());
  EXPECT_EQ(apply_overlay(f, parse_poly("Phi10"), und).verdict, Verdict::Undetermined);
  EXPECT_EQ(apply_overlay(f, parse_poly("Phi3*Phi4"), und).verdict, Verdict::Undetermined);
}

TEST(Render, CsvRoundTrip) {
  std::vector<CatalogRow> rows(described().begin(), described().begin() + 20);
  rows[0].classification.method = "quoted \"method\", with comma";
  std::string csv = render_csv(rows);
  auto recs = parse_csv(csv);
  ASSERT_EQ(recs.size(), 21u);
  EXPECT_EQ(recs[0][0], "No.");
  EXPECT_EQ(recs[1][7], "quoted \"method\", with comma");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ASSERT_EQ(recs[i + 1].size(), 10u);
    EXPECT_EQ(parse_poly(recs[i + 1][1]), rows[i].f);
    EXPECT_EQ(parse_poly(recs[i + 1][2]), rows[i].g);
    EXPECT_EQ(angles(recs[i + 1][3]), rows[i].alpha);
    EXPECT_EQ(parse_poly(recs[i + 1][5]), rows[i].diff);
  }
}

TEST(Render, CsvReader) {
  auto r = parse_csv("a,\"b,c\",\"d\"\"e\"\r\n1,,3\n");
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], std::vector<std::string>({"a", "b,c", "d\"e"}));
  EXPECT_EQ(r[1], std::vector<std::string>({"1", "", "3"}));
  EXPECT_THROW(parse_csv("a,\"bc\n"), Error);
}

TEST(Render, MarkdownTableThree) {
  auto t3 = select_rows(described(), TableSelection::T3);
  std::string md = render_markdown(t3);
  int lines = 0;
  for (char ch : md) lines += ch == '\n';
  EXPECT_EQ(lines, 2 + 14);
  EXPECT_EQ(md.rfind("| No. |", 0), 0u);
  EXPECT_EQ(select_rows(described(), TableSelection::T1).size(), 60u);
  EXPECT_EQ(select_rows(described(), TableSelection::All).size(), 111u);
}

TEST(Render, JsonSchema) {
  std::vector<CatalogRow> rows{described().front()};
  auto j = render_json(rows);
  ASSERT_TRUE(j.is_array());
  for (const char* key : {"no", "f", "g", "alpha", "beta", "diff", "c", "verdict", "computed_verdict", "method",
                          "tags", "citation"})
    EXPECT_TRUE(j[0].contains(key)) << key;
  EXPECT_EQ(j[0]["tags"][1], "T3");
}

TEST(Render, EmitAndIoError) {
  auto dir = std::filesystem::temp_directory_path() / "hypergeo_catalog_test";
  std::filesystem::create_directories(dir);
  std::vector<CatalogRow> rows(described().begin(), described().begin() + 3);
  emit_tables(rows, TableFormat::Csv, dir / "t.csv");
  std::ifstream in(dir / "t.csv");
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "No.,f,g,alpha,beta,f-g,verdict,method,tags,citation");
  try {
    emit_tables(rows, TableFormat::Json, dir / "missing" / "deeper" / "t.json");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
  std::filesystem::remove_all(dir);
  EXPECT_EQ(parse_table_format("md"), TableFormat::Markdown);
  EXPECT_EQ(parse_table_selection("T3"), TableSelection::T3);
  EXPECT_THROW(parse_table_selection("T4"), Error);
}
