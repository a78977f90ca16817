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

#include <array>
#include <string>

#include "hypergeo/matrix.hpp"
#include "hypergeo/poly.hpp"

namespace hypergeo {

enum class FormNormalization { Unit12, PrimitiveInteger };

std::string to_string(FormNormalization n);
FormNormalization parse_normalization(std::string_view text);

/// Companion matrix with ones on the subdiagonal and last column -(a_0..a_{n-1}).
RatMat companion(const IntPoly& f);

struct MonodromyData {
  int n = 0;
  IntPoly f, g;
  RatMat A, B, C;
  RatVec v;  // C e_n - e_n
  RatMat omega;
  FormNormalization normalization = FormNormalization::Unit12;
};

/// Builds A, B, C = A^-1 B, v and the invariant form, verifying all invariants.
MonodromyData monodromy_pair(const IntPoly& f, const IntPoly& g,
                             FormNormalization normalization = FormNormalization::Unit12);

/// Unique (up to scalar) antisymmetric form with A^T W A = W = B^T W B.
RatMat invariant_form(const RatMat& a, const RatMat& b,
                      FormNormalization normalization = FormNormalization::Unit12);

/// x^T W y.
Rat form_value(const RatMat& omega, const RatVec& x, const RatVec& y);
bool preserves_form(const RatMat& t, const RatMat& omega);
/// Omega expressed in the basis given by the columns of p: P^T W P.
RatMat form_in_basis(const RatMat& omega, const RatMat& p);

struct TransvectionData {
  RatMat matrix;
  RatVec w;  // primitive integer direction
  Rat mu;    // (T - I) x = mu * W(x, w) * w
};

TransvectionData as_transvection(const RatMat& t, const RatMat& omega);

enum class TripleOrigin { PowerOfA, PowerOfB, Conjugator };

std::string to_string(TripleOrigin o);

/// Letters of a conjugator over A, A^-1, B, B^-1 encoded as 0..3.
using LetterWord = std::vector<int>;

std::string letters_to_string(const LetterWord& w);
RatMat eval_letters(const LetterWord& w, const RatMat& a, const RatMat& b);

struct TransvectionTriple {
  std::array<TransvectionData, 3> C;
  std::array<RatVec, 3> w;  // v, gamma v, gamma^-1 v
  Rat lambda2;              // W(w1, w2)
  TripleOrigin origin = TripleOrigin::PowerOfA;
  LetterWord conjugator;    // gamma; C2 = gamma C gamma^-1, C3 = gamma^-1 C gamma
};

/// Triple (C, gamma C gamma^-1, gamma^-1 C gamma) with invariants verified.
TransvectionTriple make_triple(const MonodromyData& md, const LetterWord& gamma, TripleOrigin origin);

}  // namespace hypergeo
