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

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hypergeo {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : q_(v) {}
  Rat(long v) : q_(v) {}
  Rat(const BigInt& v) : q_(v) {}
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional sign. Throws ParseError.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rat abs() const;
  Rat inverse() const;  // throws Singular on zero
  std::string str() const;
  std::size_t hash() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt abs(const BigInt& a);
/// Integer with a decimal representation; throws ParseError.
BigInt parse_bigint(std::string_view text);
std::size_t hash_bigint(const BigInt& v);

}  // namespace hypergeo
