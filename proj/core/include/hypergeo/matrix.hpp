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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypergeo/rational.hpp"

namespace hypergeo {

/// Matrices larger than this in either dimension are rejected with SizeLimit.
inline constexpr std::size_t kMaxDimension = 64;

using RatVec = std::vector<Rat>;

class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols);
  /// Row-major integer literal, mostly for tests and fixed data.
  RatMat(std::initializer_list<std::initializer_list<long>> rows);

  static RatMat identity(std::size_t n);
  static RatMat from_rows(const std::vector<RatVec>& rows);
  static RatMat from_columns(const std::vector<RatVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rat>& data() const { return data_; }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;

  bool is_identity() const;
  bool is_zero() const;
  bool is_integral() const;
  std::size_t hash() const;
  std::string str() const;

  RatMat& operator+=(const RatMat& o);
  RatMat& operator-=(const RatMat& o);
  RatMat& operator*=(const Rat& s);
  friend RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
  friend RatMat operator-(RatMat a, const RatMat& b) { return a -= b; }
  friend RatMat operator*(RatMat a, const Rat& s) { return a *= s; }
  friend RatMat operator*(const Rat& s, RatMat a) { return a *= s; }
  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

struct RatMatHash {
  std::size_t operator()(const RatMat& m) const { return m.hash(); }
};

RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& v);
RatMat operator*(const RatMat& a, const RatMat& b);
RatVec operator*(const RatMat& a, const RatVec& v);

RatMat transpose(const RatMat& a);
RatMat mat_inv(const RatMat& a);             // Singular, DimensionMismatch
RatMat mat_pow(const RatMat& a, long e);      // negative powers invert first
Rat det(const RatMat& a);
std::size_t rank(const RatMat& a);
std::size_t rank_of_vectors(const std::vector<RatVec>& vs);
/// Basis of the right kernel, each vector primitive integral with first nonzero entry positive.
std::vector<RatVec> kernel(const RatMat& a);
/// Same for a system given as rows of length cols; not bound by kMaxDimension.
std::vector<RatVec> kernel(const std::vector<RatVec>& rows, std::size_t cols);
/// Unique solution X of A X = B for square nonsingular A.
RatMat solve(const RatMat& a, const RatMat& b);
RatMat commutator(const RatMat& a, const RatMat& b);   // a b a^-1 b^-1
RatMat lie_bracket(const RatMat& a, const RatMat& b);  // a b - b a

/// log of a unipotent matrix as a finite series. Throws NotUnipotent.
RatMat nilpotent_log(const RatMat& u);
/// exp of a nilpotent matrix as a finite series. Throws NotUnipotent.
RatMat nilpotent_exp(const RatMat& n);
std::size_t lie_closure_dim(const std::vector<RatMat>& gens);
/// Dimension of the unital associative algebra generated by `gens`.
std::size_t algebra_span_dim(const std::vector<RatMat>& gens);

/// Coordinates of `x` in the basis `basis` if x lies in its span.
std::optional<RatVec> coordinates_in(const std::vector<RatVec>& basis, const RatVec& x);
/// Matrix of T on span(basis), solving T P = P R. Throws InternalInconsistency if not invariant.
RatMat restrict_to_subspace(const RatMat& t, const std::vector<RatVec>& basis);

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const RatVec& a, const Rat& s);
bool vec_is_zero(const RatVec& a);
RatVec unit_vector(std::size_t n, std::size_t i);
/// Scales to coprime integers with first nonzero entry positive. Zero vector is returned unchanged.
RatVec primitive_integer(const RatVec& v);
bool parallel(const RatVec& a, const RatVec& b);
std::string vec_str(const RatVec& v);

/// Incremental row-echelon span over Q used for closures and membership tests.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}
  /// Adds v if independent; returns true when the span grew.
  bool add(const RatVec& v);
  bool contains(const RatVec& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  RatVec reduce(RatVec v) const;
  std::size_t dim_;
  std::vector<RatVec> rows_;
  std::vector<std::size_t> pivots_;
};

nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const RatVec& v);
nlohmann::json to_json(const RatMat& m);
Rat rat_from_json(const nlohmann::json& j);
RatVec vec_from_json(const nlohmann::json& j);
RatMat mat_from_json(const nlohmann::json& j);

}  // namespace hypergeo
