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

#include "hypergeo/word.hpp"

#include <cctype>
#include <set>

#include "hypergeo/errors.hpp"

namespace hypergeo {

Word Word::symbol(std::string name, long exponent) {
  Atom a;
  a.symbol = std::move(name);
  a.exponent = exponent;
  return Word{{a}};
}

Word Word::group(Word inner, long exponent) {
  Atom a;
  a.kind = Atom::Kind::Group;
  a.parts.push_back(std::move(inner));
  a.exponent = exponent;
  return Word{{a}};
}

Word Word::commutator(Word x, Word y, long exponent) {
  Atom a;
  a.kind = Atom::Kind::Commutator;
  a.parts.push_back(std::move(x));
  a.parts.push_back(std::move(y));
  a.exponent = exponent;
  return Word{{a}};
}

Word Word::inverse() const {
  Word r;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
    Atom a = *it;
    a.exponent = -a.exponent;
    r.atoms.push_back(std::move(a));
  }
  return r;
}

Word& Word::append(const Word& other) {
  atoms.insert(atoms.end(), other.atoms.begin(), other.atoms.end());
  return *this;
}

bool operator==(const Atom& a, const Atom& b) {
  return a.kind == b.kind && a.symbol == b.symbol && a.exponent == b.exponent && a.parts == b.parts;
}

bool operator==(const Word& a, const Word& b) { return a.atoms == b.atoms; }

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class WordParser {
 public:
  explicit WordParser(std::string_view s) : s_(s) {}

  Word parse() {
    Word w = word();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseFailure(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '*'))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  Word word() {
    Word w;
    for (;;) {
      skip();
      char c = peek();
      if (ident_start(c) || c == '(' || c == '[') w.atoms.push_back(atom());
      else break;
    }
    return w;
  }

  long exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (digits == pos_) fail("expected exponent");
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("exponent too large");
    }
    long e = std::stol(std::string(s_.substr(digits, pos_ - digits)));
    if (e == 0) {
      pos_ = start;
      fail("exponent must be nonzero");
    }
    return neg ? -e : e;
  }

  Atom atom() {
    Atom a;
    char c = peek();
    if (c == '(') {
      ++pos_;
      a.kind = Atom::Kind::Group;
      a.parts.push_back(word());
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      a.kind = Atom::Kind::Commutator;
      a.parts.push_back(word());
      skip();
      if (peek() != ',') fail("expected ','");
      ++pos_;
      a.parts.push_back(word());
      skip();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
    } else {
      std::size_t start = pos_;
      while (ident_char(peek())) ++pos_;
      a.symbol = std::string(s_.substr(start, pos_ - start));
    }
    a.exponent = exponent();
    return a;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string exp_suffix(long e) { return e == 1 ? "" : "^" + std::to_string(e); }

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& a : w.atoms) {
    if (!out.empty()) out += " ";
    switch (a.kind) {
      case Atom::Kind::Symbol: out += a.symbol + exp_suffix(a.exponent); break;
      case Atom::Kind::Group: out += "(" + to_string(a.parts[0]) + ")" + exp_suffix(a.exponent); break;
      case Atom::Kind::Commutator:
        out += "[" + to_string(a.parts[0]) + "," + to_string(a.parts[1]) + "]" + exp_suffix(a.exponent);
        break;
    }
  }
  return out;
}

std::pair<std::string, Word> parse_binding(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseFailure(text.size(), "expected NAME=word");
  std::size_t b = 0, e = eq;
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string name(text.substr(b, e - b));
  if (name.empty() || !ident_start(name[0])) throw ParseFailure(b, "invalid binding name");
  for (std::size_t i = 0; i < name.size(); ++i)
    if (!ident_char(name[i])) throw ParseFailure(b + i, "invalid binding name");
  try {
    return {name, parse_word(text.substr(eq + 1))};
  } catch (const ParseFailure& pf) {
    throw ParseFailure(eq + 1 + pf.position(), pf.detail().substr(0, pf.detail().rfind(" at position")));
  }
}

std::size_t WordEnv::dimension() const {
  return matrices.empty() ? 0 : matrices.begin()->second.rows();
}

namespace {

class Evaluator {
 public:
  explicit Evaluator(const WordEnv& env) : env_(env) {}

  RatMat eval(const Word& w) {
    RatMat r = RatMat::identity(env_.dimension());
    for (const auto& a : w.atoms) r = r * mat_pow(base(a), a.exponent);
    return r;
  }

 private:
  RatMat base(const Atom& a) {
    switch (a.kind) {
      case Atom::Kind::Group: return eval(a.parts[0]);
      case Atom::Kind::Commutator: return commutator(eval(a.parts[0]), eval(a.parts[1]));
      case Atom::Kind::Symbol: break;
    }
    return resolve(a.symbol);
  }

  RatMat resolve(const std::string& name) {
    if (auto it = env_.matrices.find(name); it != env_.matrices.end()) return it->second;
    if (auto it = cache_.find(name); it != cache_.end()) return it->second;
    auto it = env_.lets.find(name);
    if (it == env_.lets.end()) throw Error(ErrorCode::UnboundSymbol, name);
    if (!active_.insert(name).second) throw Error(ErrorCode::CyclicBinding, name);
    RatMat m = eval(it->second);
    active_.erase(name);
    cache_.emplace(name, m);
    return m;
  }

  const WordEnv& env_;
  std::map<std::string, RatMat> cache_;
  std::set<std::string> active_;
};

}  // namespace

RatMat eval_word(const Word& w, const WordEnv& env) { return Evaluator(env).eval(w); }

RatMat eval_word(const Word& w, const std::map<std::string, RatMat>& matrices) {
  WordEnv env;
  env.matrices = matrices;
  return eval_word(w, env);
}

bool verify_relation(const Word& w, const WordEnv& env) { return eval_word(w, env).is_identity(); }

}  // namespace hypergeo
