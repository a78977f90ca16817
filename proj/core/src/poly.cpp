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

#include "hypergeo/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hypergeo/errors.hpp"

namespace hypergeo {

IntPoly::IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  c_.reserve(ascending.size());
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, unsigned degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& a : c_) g = gcd(g, a);
  return g;
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly r = a;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly result = constant(1), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

IntPoly IntPoly::scaled(const BigInt& s) const {
  std::vector<BigInt> v = c_;
  for (auto& x : v) x *= s;
  return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::exact_div(const IntPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::Singular, "polynomial division by zero");
  if (is_zero()) return IntPoly();
  if (degree() < d.degree()) return std::nullopt;
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> q(static_cast<std::size_t>(degree() - d.degree() + 1), BigInt(0));
  const BigInt& lc = d.c_.back();
  for (int i = degree() - d.degree(); i >= 0; --i) {
    BigInt& top = rem[static_cast<std::size_t>(i + d.degree())];
    if (top == 0) continue;
    if (top % lc != 0) return std::nullopt;
    BigInt t = top / lc;
    q[static_cast<std::size_t>(i)] = t;
    for (int j = 0; j <= d.degree(); ++j)
      rem[static_cast<std::size_t>(i + j)] -= t * d.c_[static_cast<std::size_t>(j)];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly IntPoly::reversed() const {
  std::vector<BigInt> v(c_.rbegin(), c_.rend());
  return IntPoly(std::move(v));
}

bool coeff_less(const IntPoly& a, const IntPoly& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

unsigned euler_phi(unsigned m) {
  unsigned result = m, x = m;
  for (unsigned p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      result -= result / p;
    }
  }
  if (x > 1) result -= result / x;
  return result;
}

namespace {

int moebius(unsigned m) {
  int sign = 1;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      sign = -sign;
    }
  }
  if (m > 1) sign = -sign;
  return sign;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = p.content();
  if (p.leading() < 0) c = -c;
  std::vector<BigInt> v = p.coeffs();
  for (auto& x : v) x /= c;
  return IntPoly(std::move(v));
}

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const BigInt lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    IntPoly shift = IntPoly::monomial(a.leading(), static_cast<unsigned>(a.degree() - b.degree()));
    a = a.scaled(lb) - shift * b;
  }
  return a;
}

}  // namespace

IntPoly cyclotomic(unsigned m) {
  if (m == 0) throw Error(ErrorCode::DimensionMismatch, "cyclotomic index must be >= 1");
  IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    int mu = moebius(m / d);
    IntPoly term = IntPoly::monomial(1, d) - IntPoly::constant(1);
    if (mu == 1) num *= term;
    else if (mu == -1) den *= term;
  }
  auto q = num.exact_div(den);
  if (!q) throw Error(ErrorCode::InternalInconsistency, "cyclotomic division not exact");
  return *q;
}

IntPoly poly_gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

bool is_self_reciprocal(const IntPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

std::vector<unsigned> imprimitivity_set(const IntPoly& f, const IntPoly& g) {
  std::vector<unsigned> out;
  int n = std::max(f.degree(), g.degree());
  for (int d = 2; d <= n; ++d) {
    auto supported = [d](const IntPoly& p) {
      for (int i = 0; i <= p.degree(); ++i)
        if (i % d != 0 && p.coeff(i) != 0) return false;
      return true;
    };
    if (supported(f) && supported(g)) out.push_back(static_cast<unsigned>(d));
  }
  return out;
}

std::optional<std::vector<unsigned>> cyclotomic_factorization(const IntPoly& f) {
  if (!f.is_monic()) return std::nullopt;
  std::vector<unsigned> out;
  IntPoly rem = f;
  const unsigned n = static_cast<unsigned>(f.degree());
  // phi(m) >= sqrt(m/2), so phi(m) <= n forces m <= 2n^2.
  const unsigned bound = 2 * n * n + 2;
  for (unsigned m = 1; m <= bound && rem.degree() > 0; ++m) {
    if (euler_phi(m) > static_cast<unsigned>(rem.degree())) continue;
    IntPoly phi = cyclotomic(m);
    while (rem.degree() >= phi.degree()) {
      auto q = rem.exact_div(phi);
      if (!q) break;
      rem = std::move(*q);
      out.push_back(m);
    }
  }
  if (!(rem == IntPoly::constant(1))) return std::nullopt;
  return out;
}

std::vector<Rat> root_angles(const IntPoly& f) {
  auto fac = cyclotomic_factorization(f);
  if (!fac) throw Error(ErrorCode::NotCyclotomicProduct, render(f));
  std::vector<Rat> out;
  for (unsigned m : *fac)
    for (unsigned j = 0; j < m; ++j)
      if (std::gcd(j, m) == 1) out.emplace_back(BigInt(j), BigInt(m));
  std::sort(out.begin(), out.end());
  return out;
}

DifferenceProfile difference_profile(const IntPoly& f, const IntPoly& g) {
  if (f == g) throw Error(ErrorCode::ZeroDifference, "f equals g");
  const int n = f.degree();
  if (!f.is_monic() || !g.is_monic() || g.degree() != n || n < 1)
    throw Error(ErrorCode::HypothesisViolation, "f and g must be monic of equal degree");
  if (f.coeff(0) != 1 || g.coeff(0) != 1)
    throw Error(ErrorCode::HypothesisViolation, "constant terms must equal 1");
  if (!is_self_reciprocal(f) || !is_self_reciprocal(g))
    throw Error(ErrorCode::HypothesisViolation, "f and g must be self-reciprocal");

  DifferenceProfile p;
  p.h = f - g;
  p.c = p.h.leading();
  p.d = p.h.degree();
  p.r = p.h.valuation();
  p.k = n - p.d;
  bool ok = p.r >= 1 && p.r <= p.d && p.d <= n - 1 && p.r + p.d == n && p.h.coeff(p.k) == p.c;
  for (int j = 0; ok && j <= n; ++j) ok = p.h.coeff(j) == p.h.coeff(n - j);
  if (!ok) throw Error(ErrorCode::HypothesisViolation, "difference f-g is not reciprocal");
  return p;
}

std::string render(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt a = p.coeff(i);
    if (a == 0) continue;
    bool neg = a < 0;
    BigInt mag = neg ? BigInt(-a) : a;
    if (neg) out += "-";
    else if (!out.empty()) out += "+";
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string render_factored(const IntPoly& p) {
  auto fac = cyclotomic_factorization(p);
  if (!fac) return render(p);
  if (fac->empty()) return "1";
  std::map<unsigned, unsigned> mult;
  for (unsigned m : *fac) ++mult[m];
  std::string out;
  for (auto [m, e] : mult) {
    if (!out.empty()) out += "*";
    out += "Phi" + std::to_string(m);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace hypergeo
