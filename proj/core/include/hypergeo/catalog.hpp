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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypergeo/criterion.hpp"
#include "hypergeo/errors.hpp"
#include "hypergeo/poly.hpp"

namespace hypergeo {

enum class TableTag { T1, T2 };

struct CatalogRow {
  int index = 0;  // 1-based position in canonical order
  IntPoly f, g;
  std::vector<Rat> alpha, beta;
  IntPoly diff;
  BigInt c;
  Classification classification;
  Verdict computed = Verdict::Undetermined;  // verdict before the known-results overlay
  TableTag table = TableTag::T1;
  bool t3 = false;  // f or g equals (X-1)^4
};

struct KnownResult {
  enum class Kind { ThinBT, ArithmeticExplicit };
  IntPoly f, g;
  Kind kind;
  std::string citation;
};

const std::vector<KnownResult>& known_results();
/// Matches the unordered pair.
std::optional<KnownResult> lookup_known(const IntPoly& f, const IntPoly& g);

/// Products of cyclotomic polynomials of the given even degree with even Phi_1 multiplicity,
/// sorted by ascending coefficient list.
std::vector<IntPoly> admissible_products(int degree);

/// Coprime primitive unordered pairs, f before g in ascending-coefficient order, sorted.
std::vector<std::pair<IntPoly, IntPoly>> enumerate_pairs(int degree = 4);

struct CatalogOptions {
  Limits limits;
  int degree = 4;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Classifies every enumerated pair, then applies the known-results overlay without
/// downgrading a computed certificate.
std::vector<CatalogRow> classify_catalog(const CatalogOptions& opts);
std::vector<CatalogRow> classify_catalog(const Limits& limits);

/// Builds an unclassified row (angles, difference, tags) for a pair.
CatalogRow describe_pair(const IntPoly& f, const IntPoly& g);
/// Applies the overlay to a computed classification.
Classification apply_overlay(const IntPoly& f, const IntPoly& g, Classification computed);

enum class TableFormat { Csv, Json, Markdown };
enum class TableSelection { All, T1, T2, T3 };

TableFormat parse_table_format(std::string_view text);
TableSelection parse_table_selection(std::string_view text);

std::vector<CatalogRow> select_rows(const std::vector<CatalogRow>& rows, TableSelection sel);

std::string format_angles(const std::vector<Rat>& a);
std::string table_tags(const CatalogRow& row);

std::string render_csv(const std::vector<CatalogRow>& rows);
std::string render_markdown(const std::vector<CatalogRow>& rows);
nlohmann::json render_json(const std::vector<CatalogRow>& rows);
/// Writes rows in the chosen format. Throws IoError.
void emit_tables(const std::vector<CatalogRow>& rows, TableFormat format, const std::filesystem::path& path);

/// Minimal RFC 4180 reader: quoted fields, doubled quotes, LF or CRLF records.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace hypergeo
