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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypergeo/matrix.hpp"

namespace hypergeo {

struct Word;

struct Atom {
  enum class Kind { Symbol, Group, Commutator };
  Kind kind = Kind::Symbol;
  std::string symbol;       // Kind::Symbol
  std::vector<Word> parts;  // one part for Group, two for Commutator
  long exponent = 1;
};

/// Product of atoms, read left to right. The empty word is the identity.
struct Word {
  std::vector<Atom> atoms;

  bool empty() const { return atoms.empty(); }
  static Word symbol(std::string name, long exponent = 1);
  static Word group(Word inner, long exponent);
  static Word commutator(Word a, Word b, long exponent = 1);
  Word inverse() const;
  Word& append(const Word& other);
};

bool operator==(const Word& a, const Word& b);
bool operator==(const Atom& a, const Atom& b);

/// word := atom* ; atom := sym ['^' int] | '[' word ',' word ']' ['^' int] | '(' word ')' ['^' int].
/// Atoms are separated by whitespace or '*'. Throws ParseError.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// "NAME=word" as used by --let.
std::pair<std::string, Word> parse_binding(std::string_view text);

/// Matrices for base symbols plus named words; names resolve lazily and acyclically.
struct WordEnv {
  std::map<std::string, RatMat> matrices;
  std::map<std::string, Word> lets;

  std::size_t dimension() const;
};

/// Exact evaluation with [a,b] = a b a^-1 b^-1. Throws UnboundSymbol, CyclicBinding, Singular.
RatMat eval_word(const Word& w, const WordEnv& env);
RatMat eval_word(const Word& w, const std::map<std::string, RatMat>& matrices);

/// True iff the word evaluates to the identity.
bool verify_relation(const Word& w, const WordEnv& env);

}  // namespace hypergeo
