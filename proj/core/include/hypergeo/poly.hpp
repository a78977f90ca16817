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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypergeo/rational.hpp"

namespace hypergeo {

/// Dense integer polynomial, coefficients in ascending degree, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, unsigned degree);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const;
  BigInt leading() const;
  /// Smallest index with a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const;
  bool is_monic() const { return !is_zero() && c_.back() == 1; }
  BigInt content() const;
  BigInt eval(const BigInt& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly pow(unsigned e) const;
  IntPoly scaled(const BigInt& s) const;
  /// Quotient when `d` divides `*this` exactly over Z.
  std::optional<IntPoly> exact_div(const IntPoly& d) const;
  /// Reverse coefficient list: X^deg * p(1/X).
  IntPoly reversed() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Lexicographic comparison of ascending coefficient lists.
bool coeff_less(const IntPoly& a, const IntPoly& b);

IntPoly cyclotomic(unsigned m);
unsigned euler_phi(unsigned m);

/// Primitive gcd over Q, scaled into Z with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
bool is_self_reciprocal(const IntPoly& p);

/// The set {d > 1 : f(X) = f1(X^d) and g(X) = g1(X^d)}.
std::vector<unsigned> imprimitivity_set(const IntPoly& f, const IntPoly& g);

/// Multiset of indices m with f = prod Phi_m, or nullopt.
std::optional<std::vector<unsigned>> cyclotomic_factorization(const IntPoly& f);

/// Sorted parameters j/m in [0,1) for each cyclotomic factor. Throws NotCyclotomicProduct.
std::vector<Rat> root_angles(const IntPoly& f);

struct DifferenceProfile {
  IntPoly h;   // f - g
  BigInt c;    // leading coefficient of h
  int d = 0;   // degree of h
  int r = 0;   // valuation of h
  int k = 0;   // n - d
};

DifferenceProfile difference_profile(const IntPoly& f, const IntPoly& g);

/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*, term := factor (['*'] factor)*,
/// factor := base ['^' uint], base := int | X | x | Phi<m> | '(' expr ')';
/// alternatively "coeffs:[a0,a1,...]".
IntPoly parse_poly(std::string_view text);

/// Descending-degree rendering such as "X^4-4X^3+6X^2-4X+1".
std::string render(const IntPoly& p);
/// Product of cyclotomic factors such as "Phi1^2*Phi3" (falls back to render).
std::string render_factored(const IntPoly& p);

}  // namespace hypergeo
