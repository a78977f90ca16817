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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypergeo/hypotheses.hpp"
#include "hypergeo/monodromy.hpp"
#include "hypergeo/poly.hpp"
#include "hypergeo/witness.hpp"

namespace hypergeo {

enum class Verdict { ArithmeticThm1, ArithmeticCertificate, KnownThin, Undetermined };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);
/// Position in the lattice ArithmeticThm1 > ArithmeticCertificate > KnownThin > Undetermined.
int verdict_rank(Verdict v);

struct Limits {
  int depth = 6;
  int power_bound = 48;
  bool commutator_refinement = true;
};

/// Word over the two Levi generators M1 (index 0) and M2 (index 1), freely reduced.
struct Sl2Word {
  std::vector<std::pair<int, long>> letters;

  bool empty() const { return letters.empty(); }
  std::string str() const;
};

/// Evaluates a Levi word with M1 = [[1,-c],[0,1]] and M2 = [[1,0],[c,1]].
RatMat eval_sl2(const Sl2Word& w, const BigInt& c);

/// Word in <M1, M2> equal to m, or nullopt. Throws UnsupportedC unless |c| is 1 or 2.
std::optional<Sl2Word> sl2_membership(const RatMat& m, const BigInt& c);

struct LeviPair {
  RatMat M1, M2;
  Rat t;
};

/// Matrices of C1, C2 on span(w1, w2) in the basis (w1, w2). Throws InternalInconsistency.
LeviPair levi_matrices(const TransvectionTriple& triple);

/// C1 = C, C2 = A^-k C A^k, C3 = A^k C A^-k; falls back to powers of B.
TransvectionTriple build_triple(const MonodromyData& md, const DifferenceProfile& profile);

/// Shortest conjugator gamma over A^{+-1}, B^{+-1} with |e_n-coefficient of gamma v| in {1,2}.
std::optional<TransvectionTriple> extended_triple_search(const MonodromyData& md, int depth);

struct ArithmeticCertificate {
  IntPoly f, g;
  TripleOrigin origin = TripleOrigin::PowerOfA;
  LetterWord conjugator;
  std::string path;  // "constructive" or "search"
  std::array<int, 3> order{0, 1, 2};  // (i, j, k): Levi pair and the remaining transvection
  Rat t;
  int m = 0;
  Sl2Word sl2_word;
  Certificate witness;
};

struct Classification {
  Verdict verdict = Verdict::Undetermined;
  std::string method;
  std::optional<ArithmeticCertificate> certificate;
  std::string citation;
};

/// Fast path: ArithmeticThm1 iff |c| <= 2, otherwise Undetermined. Throws HypothesisViolation.
Classification classify_thm1(const IntPoly& f, const IntPoly& g);

/// Verifies the transvection criterion for `triple`; ArithmeticCertificate or Undetermined.
Classification check_thm2(const MonodromyData& md, const TransvectionTriple& triple, const Limits& limits);

/// Full pipeline: fast path, triple from powers, extended conjugator search.
Classification classify(const IntPoly& f, const IntPoly& g, const Limits& limits);

/// Bindings C1, C2, C3 (and A, B) used by a certificate's witness word.
WordEnv certificate_env(const MonodromyData& md, const ArithmeticCertificate& cert);

nlohmann::json to_json(const ArithmeticCertificate& cert, Verdict verdict, const std::string& citation);
/// Rebuilds the group from the stored pair and conjugator, re-evaluates the witness word and
/// rechecks membership. No search is performed.
bool recheck_certificate(const nlohmann::json& j);
bool recheck_certificate(const ArithmeticCertificate& cert);

}  // namespace hypergeo
