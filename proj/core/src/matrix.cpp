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

#include "hypergeo/matrix.hpp"

#include <sstream>
#include <utility>

#include "hypergeo/errors.hpp"

namespace hypergeo {

namespace {

void check_size(std::size_t r, std::size_t c) {
  if (r > kMaxDimension || c > kMaxDimension)
    throw Error(ErrorCode::SizeLimit, std::to_string(r) + "x" + std::to_string(c) + " exceeds " +
                                          std::to_string(kMaxDimension));
}

void check_square(const RatMat& a, const char* op) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, std::string(op) + " needs a square matrix");
}

using IntRow = std::vector<BigInt>;

// Clears denominators row by row; the scale of row i is returned in `scales[i]`.
IntRow integer_row(const RatVec& r, BigInt* scale) {
  BigInt l = 1;
  for (const Rat& x : r) l = lcm(l, x.den());
  IntRow out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) out[j] = r[j].num() * (l / r[j].den());
  if (scale) *scale = l;
  return out;
}

std::vector<IntRow> integer_rows(const RatMat& a, std::vector<BigInt>* scales) {
  std::vector<IntRow> out;
  if (scales) scales->assign(a.rows(), BigInt(1));
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(integer_row(a.row(i), scales ? &(*scales)[i] : nullptr));
  return out;
}

struct Echelon {
  std::vector<IntRow> m;
  std::vector<std::size_t> pivots;
  int sign = 1;
};

// Fraction-free Gaussian elimination; pivots are searched in columns [0, pivot_cols).
Echelon bareiss(std::vector<IntRow> m, std::size_t pivot_cols) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt t = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    e.pivots.push_back(col);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

// Reduced row echelon form over Q of the echelon rows.
std::vector<RatVec> reduced_rows(const Echelon& e) {
  std::vector<RatVec> rr;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    RatVec row(e.m[i].size());
    Rat piv(e.m[i][e.pivots[i]]);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = Rat(e.m[i][j]) / piv;
    rr.push_back(std::move(row));
  }
  for (std::size_t i = rr.size(); i-- > 0;) {
    std::size_t pc = e.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      Rat f = rr[k][pc];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < rr[k].size(); ++j) rr[k][j] -= f * rr[i][j];
    }
  }
  return rr;
}

RatVec flatten(const RatMat& m) { return m.data(); }

}  // namespace

RatMat::RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_size(rows, cols);
  data_.assign(rows * cols, Rat(0));
}

RatMat::RatMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  check_size(rows_, cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMat();
  RatMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMat RatMat::from_columns(const std::vector<RatVec>& cols) {
  return transpose(from_rows(cols));
}

RatVec RatMat::row(std::size_t i) const {
  return RatVec(data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_));
}

RatVec RatMat::col(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool RatMat::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

bool RatMat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatMat::is_integral() const {
  for (const auto& x : data_)
    if (!x.is_integer()) return false;
  return true;
}

std::size_t RatMat::hash() const {
  std::size_t h = rows_ * 131 + cols_;
  for (const auto& x : data_) h = h * 1000003 ^ x.hash();
  return h;
}

std::string RatMat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

RatMat& RatMat::operator+=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMat& RatMat::operator-=(const RatMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMat& RatMat::operator*=(const Rat& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  RatMat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

RatVec mat_vec(const RatMat& a, const RatVec& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  RatVec r(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[j].is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

RatMat operator*(const RatMat& a, const RatMat& b) { return mat_mul(a, b); }
RatVec operator*(const RatMat& a, const RatVec& v) { return mat_vec(a, v); }

RatMat transpose(const RatMat& a) {
  RatMat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

RatMat solve(const RatMat& a, const RatMat& b) {
  check_square(a, "solve");
  if (b.rows() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve right-hand side");
  const std::size_t n = a.rows(), m = b.cols();
  RatMat aug(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = b(i, j);
  }
  Echelon e = bareiss(integer_rows(aug, nullptr), n);
  if (e.pivots.size() < n) throw Error(ErrorCode::Singular, "matrix is singular");
  RatMat x(n, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Rat acc(e.m[i][n + c]);
      for (std::size_t j = i + 1; j < n; ++j)
        if (e.m[i][j] != 0) acc -= Rat(e.m[i][j]) * x(j, c);
      x(i, c) = acc / Rat(e.m[i][i]);
    }
  }
  return x;
}

RatMat mat_inv(const RatMat& a) {
  check_square(a, "mat_inv");
  return solve(a, RatMat::identity(a.rows()));
}

RatMat mat_pow(const RatMat& a, long e) {
  check_square(a, "mat_pow");
  RatMat base = e < 0 ? mat_inv(a) : a;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RatMat result = RatMat::identity(a.rows());
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return result;
}

Rat det(const RatMat& a) {
  check_square(a, "det");
  if (a.rows() == 0) return Rat(1);
  std::vector<BigInt> scales;
  Echelon e = bareiss(integer_rows(a, &scales), a.cols());
  if (e.pivots.size() < a.rows()) return Rat(0);
  BigInt s = 1;
  for (const auto& x : scales) s *= x;
  Rat d(e.m[a.rows() - 1][a.cols() - 1] * e.sign, s);
  return d;
}

std::size_t rank(const RatMat& a) {
  if (a.rows() == 0) return 0;
  return bareiss(integer_rows(a, nullptr), a.cols()).pivots.size();
}

std::size_t rank_of_vectors(const std::vector<RatVec>& vs) {
  if (vs.empty()) return 0;
  return rank(RatMat::from_rows(vs));
}

std::vector<RatVec> kernel(const std::vector<RatVec>& rows, std::size_t cols) {
  std::vector<RatVec> out;
  if (rows.empty()) {
    for (std::size_t i = 0; i < cols; ++i) out.push_back(unit_vector(cols, i));
    return out;
  }
  std::vector<IntRow> m;
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "kernel rows have unequal length");
    m.push_back(integer_row(r, nullptr));
  }
  Echelon e = bareiss(std::move(m), cols);
  std::vector<RatVec> rr = reduced_rows(e);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -rr[i][f];
    out.push_back(primitive_integer(v));
  }
  return out;
}

std::vector<RatVec> kernel(const RatMat& a) {
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return kernel(rows, a.cols());
}

RatMat commutator(const RatMat& a, const RatMat& b) {
  return a * b * mat_inv(a) * mat_inv(b);
}

RatMat lie_bracket(const RatMat& a, const RatMat& b) { return a * b - b * a; }

namespace {

bool nilpotent(const RatMat& n) {
  RatMat p = n;
  for (std::size_t i = 1; i < n.rows(); ++i) p = p * n;
  return p.is_zero();
}

}  // namespace

RatMat nilpotent_log(const RatMat& u) {
  check_square(u, "nilpotent_log");
  const std::size_t n = u.rows();
  RatMat nmat = u - RatMat::identity(n);
  if (!nilpotent(nmat)) throw Error(ErrorCode::NotUnipotent, "u - I is not nilpotent");
  RatMat acc(n, n), power = nmat;
  for (std::size_t i = 1; i < n && !power.is_zero(); ++i) {
    Rat coef(BigInt(i % 2 == 1 ? 1 : -1), BigInt(static_cast<unsigned long>(i)));
    acc += power * coef;
    power = power * nmat;
  }
  return acc;
}

RatMat nilpotent_exp(const RatMat& nmat) {
  check_square(nmat, "nilpotent_exp");
  const std::size_t n = nmat.rows();
  if (!nilpotent(nmat)) throw Error(ErrorCode::NotUnipotent, "matrix is not nilpotent");
  RatMat acc = RatMat::identity(n), power = nmat;
  BigInt fact = 1;
  for (std::size_t i = 1; i < n && !power.is_zero(); ++i) {
    fact *= static_cast<unsigned long>(i);
    acc += power * Rat(BigInt(1), fact);
    power = power * nmat;
  }
  return acc;
}

std::size_t lie_closure_dim(const std::vector<RatMat>& gens) {
  if (gens.empty()) return 0;
  const std::size_t n = gens[0].rows();
  SpanBuilder span(n * n);
  std::vector<RatMat> basis;
  for (const auto& g : gens)
    if (span.add(flatten(g))) basis.push_back(g);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      RatMat br = lie_bracket(basis[i], basis[j]);
      if (span.add(flatten(br))) basis.push_back(std::move(br));
    }
  }
  return basis.size();
}

std::size_t algebra_span_dim(const std::vector<RatMat>& gens) {
  if (gens.empty()) return 1;
  const std::size_t n = gens[0].rows();
  SpanBuilder span(n * n);
  std::vector<RatMat> basis{RatMat::identity(n)};
  span.add(flatten(basis[0]));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& g : gens) {
      RatMat p = basis[i] * g;
      if (span.add(flatten(p))) basis.push_back(std::move(p));
    }
  }
  return basis.size();
}

std::optional<RatVec> coordinates_in(const std::vector<RatVec>& basis, const RatVec& x) {
  const std::size_t k = basis.size(), n = x.size();
  RatMat aug(n, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].size() != n) throw Error(ErrorCode::DimensionMismatch, "basis vector length");
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug(i, k) = x[i];
  Echelon e = bareiss(integer_rows(aug, nullptr), k + 1);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  std::vector<RatVec> rr = reduced_rows(e);
  RatVec c(k, Rat(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) c[e.pivots[i]] = rr[i][k];
  return c;
}

RatMat restrict_to_subspace(const RatMat& t, const std::vector<RatVec>& basis) {
  RatMat r(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto c = coordinates_in(basis, t * basis[j]);
    if (!c) throw Error(ErrorCode::InternalInconsistency, "subspace is not invariant");
    for (std::size_t i = 0; i < basis.size(); ++i) r(i, j) = (*c)[i];
  }
  return r;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  RatVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  RatVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec vec_scale(const RatVec& a, const Rat& s) {
  RatVec r = a;
  for (auto& x : r) x *= s;
  return r;
}

bool vec_is_zero(const RatVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

RatVec unit_vector(std::size_t n, std::size_t i) {
  RatVec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

RatVec primitive_integer(const RatVec& v) {
  if (vec_is_zero(v)) return v;
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  BigInt g = 0;
  std::vector<BigInt> ints;
  for (const auto& x : v) {
    ints.push_back(x.num() * (l / x.den()));
    g = gcd(g, ints.back());
  }
  for (const auto& x : ints) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  RatVec out;
  for (const auto& x : ints) out.emplace_back(BigInt(x / g));
  return out;
}

bool parallel(const RatVec& a, const RatVec& b) {
  if (vec_is_zero(a) || vec_is_zero(b)) return false;
  return rank_of_vectors({a, b}) == 1;
}

std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

RatVec SpanBuilder::reduce(RatVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rat f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool SpanBuilder::add(const RatVec& v) {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "span vector length");
  RatVec red = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && red[p].is_zero()) ++p;
  if (p == dim_) return false;
  Rat inv = red[p].inverse();
  for (auto& x : red) x *= inv;
  rows_.push_back(std::move(red));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const RatVec& v) const { return vec_is_zero(reduce(v)); }

nlohmann::json to_json(const Rat& r) { return r.str(); }

nlohmann::json to_json(const RatVec& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

nlohmann::json to_json(const RatMat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

Rat rat_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected rational string or integer");
}

RatVec vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected array");
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

RatMat mat_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected array of rows");
  std::vector<RatVec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  return RatMat::from_rows(rows);
}

}  // namespace hypergeo
