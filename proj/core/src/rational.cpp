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

#include "hypergeo/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>

#include "hypergeo/errors.hpp"

namespace hypergeo {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::Singular, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  BigInt n = parse_bigint(text.substr(0, slash));
  BigInt d = parse_bigint(text.substr(slash + 1));
  if (d == 0) throw ParseFailure(slash + 1, "zero denominator");
  return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Singular, "inverse of zero");
  return Rat(mpq_class(1) / q_);
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rat::hash() const {
  std::size_t h = hash_bigint(q_.get_num());
  return h ^ (hash_bigint(q_.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body(text.substr(i, end - i));
  std::size_t digits = (!body.empty() && (body[0] == '-' || body[0] == '+')) ? 1 : 0;
  if (digits == body.size()) throw ParseFailure(i, "expected integer");
  for (std::size_t k = digits; k < body.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(body[k])))
      throw ParseFailure(i + k, "unexpected character in integer");
  }
  if (body[0] == '+') body.erase(0, 1);
  return BigInt(body, 10);
}

std::size_t hash_bigint(const BigInt& v) {
  // Residues modulo two word-sized primes are enough to spread matrix keys.
  unsigned long a = mpz_fdiv_ui(v.get_mpz_t(), 4294967291UL);
  unsigned long b = mpz_fdiv_ui(v.get_mpz_t(), 4294967279UL);
  return std::hash<unsigned long long>{}((static_cast<unsigned long long>(a) << 32) ^ b ^
                                         static_cast<unsigned long long>(sgn(v) + 1));
}

}  // namespace hypergeo
