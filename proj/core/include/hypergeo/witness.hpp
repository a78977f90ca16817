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

#include "hypergeo/matrix.hpp"
#include "hypergeo/monodromy.hpp"
#include "hypergeo/word.hpp"

namespace hypergeo {

/// Basis e1, e2, ..., e_{n/2}, e*_{n/2}, ..., e*_2, e*_1 adapted to the flag Qe < W < X.
struct FlagBasis {
  std::vector<RatVec> vectors;
  Rat lambda1;  // W(e, e*)
  Rat lambda2;  // W(w1, w2)
  RatMat change_of_basis;  // columns are `vectors`
  RatMat omega;
  std::array<int, 2> pair{0, 1};  // triple indices used for e2 and e2*

  std::size_t n() const { return vectors.size(); }
  const RatVec& e() const { return vectors.front(); }
  const RatVec& e_star() const { return vectors.back(); }
  const RatVec& w1() const { return vectors[1]; }
  const RatVec& w2() const { return vectors[vectors.size() - 2]; }
  /// Symplectic basis of the complement of X (empty for n = 4).
  std::vector<RatVec> x_perp() const;

  RatMat to_flag(const RatMat& m) const;    // P^-1 M P
  RatMat from_flag(const RatMat& m) const;  // P M P^-1
};

FlagBasis flag_basis(const TransvectionTriple& triple, const RatMat& omega);
/// Flag from explicit basis columns (e, w1, ..., w2, e*), n = 4 or a full ordered basis.
FlagBasis flag_from_columns(const RatMat& p, const RatMat& omega);

/// M e = e, (M-1)W in Qe, (M-1)e* in W, M = 1 on the complement of X.
bool in_unipotent_radical(const RatMat& m, const FlagBasis& flag);
/// Upper unitriangular in flag coordinates.
bool in_borel_unipotent(const RatMat& m, const FlagBasis& flag);
bool acts_nontrivially_on_w(const RatMat& m, const FlagBasis& flag);

enum class CertificateKind { UnipotentRadical, RootGroupPair, LieClosure };
std::string to_string(CertificateKind k);

struct Certificate {
  CertificateKind kind = CertificateKind::UnipotentRadical;
  Word witness_word;
  RatMat witness_matrix;
  FlagBasis flag;
  Rat y2, z;                   // RootGroupPair
  std::size_t lie_dim = 0;     // LieClosure
  std::vector<Word> generator_words;     // LieClosure
  std::vector<RatMat> generator_matrices;
};

/// First candidate of the shape [[1,0,y2,z],[0,1,0,(l1/l2)y2],[0,0,1,0],[0,0,0,1]] on the
/// (e1, e2, e2*, e1*) block with (y2, z) != 0. Throws ShapeMismatch.
Certificate rootgroup_witnesses(const std::vector<std::pair<Word, RatMat>>& candidates,
                                const FlagBasis& flag);

/// LieClosure certificate when the logs span the full Borel nilradical, dimension (n/2)^2.
/// Throws InsufficientClosure or ShapeMismatch.
Certificate finite_index_in_borel_unipotent(const std::vector<std::pair<Word, RatMat>>& gens,
                                            const FlagBasis& flag);

struct WitnessSearchOptions {
  int depth = 6;
  bool commutators = true;  // second pass over commutators of short words
};

/// Shortest word over C1^{+-1}, C2^{+-1}, C3^{+-1} (lexicographic tiebreak) that lies in the
/// unipotent radical and moves W. `env` must bind C1, C2, C3.
std::optional<Certificate> find_unipotent_witness(const WordEnv& env, const FlagBasis& flag,
                                                  const WitnessSearchOptions& opts);
std::optional<Certificate> find_unipotent_witness(const WordEnv& env, const FlagBasis& flag, int depth);

/// Recomputes the witness from its word and rechecks the kind-specific predicate.
bool revalidate(const Certificate& cert, const WordEnv& env);

/// Entry (2,4) equals (l1/l2) entry (1,3) and entry (3,4) equals -(l1/l2) entry (1,2).
bool rootgroup_shape_identity(const RatMat& m, const FlagBasis& flag);

nlohmann::json to_json(const FlagBasis& flag);
nlohmann::json to_json(const Certificate& cert);

}  // namespace hypergeo
