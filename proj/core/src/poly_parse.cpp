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

#include <cctype>
#include <string>

#include "hypergeo/errors.hpp"
#include "hypergeo/poly.hpp"

namespace hypergeo {

namespace {

constexpr unsigned long kMaxExponent = 4096;
constexpr unsigned long kMaxCyclotomic = 100000;

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip();
    IntPoly p = starts_with("coeffs") ? coeff_list() : expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseFailure(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool starts_with(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned long small_uint(unsigned long limit, const char* what) {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9 || std::stoul(d) > limit) {
      pos_ = start;
      fail(std::string(what) + " too large");
    }
    return std::stoul(d);
  }

  IntPoly coeff_list() {
    pos_ += 6;
    expect(':');
    expect('[');
    std::vector<BigInt> c;
    skip();
    if (peek() != ']') {
      for (;;) {
        skip();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
          neg = peek() == '-';
          ++pos_;
        }
        BigInt v(digits(), 10);
        c.push_back(neg ? BigInt(-v) : v);
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(']');
    return IntPoly(std::move(c));
  }

  IntPoly expr() {
    skip();
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    IntPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      IntPoly t = term();
      if (c == '+') acc += t;
      else acc -= t;
    }
    return acc;
  }

  bool base_start() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'X' || c == 'x' || c == 'P' || c == '(';
  }

  IntPoly term() {
    IntPoly acc = factor();
    for (;;) {
      skip();
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else if (base_start()) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  IntPoly factor() {
    IntPoly b = base();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      b = b.pow(static_cast<unsigned>(small_uint(kMaxExponent, "exponent")));
    }
    return b;
  }

  IntPoly base() {
    skip();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(BigInt(digits(), 10));
    if (c == 'X' || c == 'x') {
      ++pos_;
      return IntPoly::x();
    }
    if (starts_with("Phi")) {
      pos_ += 3;
      std::size_t start = pos_;
      unsigned long m = small_uint(kMaxCyclotomic, "cyclotomic index");
      if (m == 0) {
        pos_ = start;
        fail("cyclotomic index must be positive");
      }
      return cyclotomic(static_cast<unsigned>(m));
    }
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      expect(')');
      return inner;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace hypergeo
