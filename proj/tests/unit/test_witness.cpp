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

#include <gtest/gtest.h>

#include <functional>

#include "hypergeo/errors.hpp"
#include "hypergeo/witness.hpp"
#include "hypergeo/word.hpp"
#include "worked_examples.hpp"

using namespace hypergeo;
namespace ts = hypergeo::test_support;

namespace {

struct Loaded {
  ts::WorkedExample ex;
  MonodromyData md;
  WordEnv env;
  FlagBasis flag;
};

Loaded load(ts::WorkedExample ex) {
  MonodromyData md = monodromy_pair(ex.f, ex.g);
  WordEnv env = ts::example_env(ex, md);
  FlagBasis flag = flag_from_columns(ex.basis, md.omega);
  return {std::move(ex), std::move(md), std::move(env), std::move(flag)};
}

RatMat named(const Loaded& l, const std::string& name) { return eval_word(Word::symbol(name), l.env); }

std::vector<std::pair<Word, RatMat>> gens(const Loaded& l, std::initializer_list<const char*> names) {
  std::vector<std::pair<Word, RatMat>> out;
  for (const char* n : names) out.emplace_back(Word::symbol(n), named(l, n));
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST(Word, ParseAndRender) {
  EXPECT_EQ(to_string(parse_word("A^-1 C A")), "A^-1 C A");
  EXPECT_EQ(to_string(parse_word("(E^-2 F)^2 [E,F]^3")), "(E^-2 F)^2 [E,F]^3");
  EXPECT_EQ(parse_word("A*B"), parse_word("A B"));
  EXPECT_TRUE(parse_word("").empty());
  for (const char* bad : {"A^", "[A,B", "(A", "A^x", "[A]", ")"}) EXPECT_THROW(parse_word(bad), Error) << bad;
  auto [name, w] = parse_binding("E=C2^-1 C3");
  EXPECT_EQ(name, "E");
  EXPECT_EQ(w, parse_word("C2^-1 C3"));
  EXPECT_THROW(parse_binding("=A"), Error);
  EXPECT_EQ(parse_word("A B^-2").inverse(), parse_word("B^2 A^-1"));
}

TEST(EvalWord, Definitions) {
  RatMat a{{1, 1}, {0, 1}}, b{{1, 0}, {1, 1}};
  std::map<std::string, RatMat> m{{"a", a}, {"b", b}};
  EXPECT_EQ(eval_word(parse_word("[a,b]"), m), a * b * mat_inv(a) * mat_inv(b));
  EXPECT_EQ(eval_word(parse_word("a^-3 b^2"), m), mat_pow(a, -3) * mat_pow(b, 2));
  EXPECT_EQ(eval_word(parse_word("(a b)^-1"), m), mat_inv(a * b));
  EXPECT_EQ(eval_word(parse_word("[a,b]^2"), m), mat_pow(commutator(a, b), 2));
  EXPECT_EQ(eval_word(parse_word("a a^-1"), m), RatMat::identity(2));
  EXPECT_EQ(code_of([&] { eval_word(parse_word("q"), m); }), ErrorCode::UnboundSymbol);
  WordEnv env;
  env.matrices = m;
  env.lets["p"] = parse_word("r a");
  env.lets["r"] = parse_word("p");
  EXPECT_EQ(code_of([&] { eval_word(parse_word("p"), env); }), ErrorCode::CyclicBinding);
  EXPECT_EQ(code_of([&] { eval_word(parse_word("s^-1"), std::map<std::string, RatMat>{{"s", RatMat(2, 2)}}); }),
            ErrorCode::Singular);
}

TEST(WorkedWords, ReproduceInAdaptedBasis) {
  for (auto ex : {ts::mixed_example(), ts::phi10_example(), ts::phi4phi6_example()}) {
    Loaded l = load(ex);
    ASSERT_FALSE(l.ex.expected.empty());
    for (const auto& [name, m] : l.ex.expected)
      EXPECT_EQ(ts::in_basis(l.ex, named(l, name)), m) << ex.name << " " << name;
  }
}

TEST(WorkedWords, CommutatorRelation) {
  for (auto ex : {ts::phi10_example(), ts::phi4phi6_example(), ts::phi6sq_example()}) {
    Loaded l = load(ex);
    EXPECT_TRUE(verify_relation(parse_word("[E,[E,F]]"), l.env)) << ex.name;
    EXPECT_FALSE(verify_relation(parse_word("[E,F]"), l.env)) << ex.name;
  }
  Loaded l = load(ts::phi10_example());
  EXPECT_FALSE(verify_relation(parse_word("A B A^-1 B^-1"), l.env));
}

TEST(FlagBasis, FromColumnsGivesAntidiagonalForm) {
  for (auto ex : {ts::mixed_example(), ts::phi10_example(), ts::phi4phi6_example()}) {
    Loaded l = load(ex);
    RatMat w = form_in_basis(l.md.omega, l.flag.change_of_basis);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i + j != 3) {
          EXPECT_TRUE(w(i, j).is_zero()) << ex.name;
        }
    EXPECT_EQ(l.flag.lambda1, w(0, 3));
    EXPECT_EQ(l.flag.lambda2, w(1, 2));
  }
  Loaded l = load(ts::phi10_example());
  EXPECT_EQ(code_of([&] { flag_from_columns(RatMat::identity(4) * Rat(0), l.md.omega); }), ErrorCode::DegenerateFlag);
  EXPECT_EQ(code_of([&] { flag_from_columns(RatMat::identity(2), l.md.omega); }), ErrorCode::DimensionMismatch);
}

TEST(FlagBasis, FromTripleSpansSameFlagAsWorkedBasis) {
  Loaded l = load(ts::phi10_example());
  TransvectionTriple tr = make_triple(l.md, {3, 3}, TripleOrigin::Conjugator);
  FlagBasis fb = flag_basis(tr, l.md.omega);
  EXPECT_TRUE(parallel(fb.e(), l.ex.basis.col(0)));
  EXPECT_EQ(rank_of_vectors({fb.w1(), fb.w2(), l.ex.basis.col(1), l.ex.basis.col(2), fb.e()}), 3u);
  RatMat w = form_in_basis(l.md.omega, fb.change_of_basis);
  EXPECT_TRUE(w(0, 1).is_zero() && w(0, 2).is_zero() && w(1, 3).is_zero() && w(2, 3).is_zero());
  EXPECT_TRUE(fb.x_perp().empty());
  auto j = to_json(fb);
  EXPECT_TRUE(j.contains("vectors") && j.contains("lambda1") && j.contains("lambda2"));
}

TEST(UnipotentRadical, Membership) {
  Loaded mixed = load(ts::mixed_example());
  // C1 acts on W by a Levi element: outside the radical but upper unitriangular.
  EXPECT_FALSE(in_unipotent_radical(named(mixed, "C1"), mixed.flag));
  EXPECT_TRUE(in_borel_unipotent(named(mixed, "C1"), mixed.flag));
  EXPECT_FALSE(in_unipotent_radical(named(mixed, "C3"), mixed.flag));
  EXPECT_TRUE(in_unipotent_radical(RatMat::identity(4), mixed.flag));
  EXPECT_TRUE(in_borel_unipotent(RatMat::identity(4), mixed.flag));
  for (const char* n : {"x", "y", "z"}) {
    EXPECT_TRUE(in_unipotent_radical(named(mixed, n), mixed.flag)) << n;
    EXPECT_TRUE(rootgroup_shape_identity(named(mixed, n), mixed.flag)) << n;
  }
  // x only moves e* into Qe, so it is trivial on W.
  EXPECT_FALSE(acts_nontrivially_on_w(named(mixed, "x"), mixed.flag));
  EXPECT_TRUE(acts_nontrivially_on_w(named(mixed, "y"), mixed.flag));
}

TEST(RootGroupWitnesses, Examples) {
  Loaded l = load(ts::phi10_example());
  Certificate c = rootgroup_witnesses(gens(l, {"x"}), l.flag);
  EXPECT_EQ(c.kind, CertificateKind::RootGroupPair);
  EXPECT_EQ(c.y2, Rat(0));
  EXPECT_EQ(c.z, Rat(16));
  Certificate d = rootgroup_witnesses(gens(l, {"C1", "y"}), l.flag);
  EXPECT_EQ(d.witness_word, Word::symbol("y"));
  EXPECT_EQ(d.y2, Rat(16));
  EXPECT_EQ(d.z, Rat(0));
  EXPECT_TRUE(revalidate(d, l.env));
  EXPECT_EQ(code_of([&] { rootgroup_witnesses(gens(l, {"C1"}), l.flag); }), ErrorCode::ShapeMismatch);
  EXPECT_EQ(code_of([&] { rootgroup_witnesses({}, l.flag); }), ErrorCode::ShapeMismatch);
}

TEST(FiniteIndex, WorkedGeneratorSets) {
  for (auto ex : {ts::mixed_example(), ts::phi10_example()}) {
    Loaded l = load(ex);
    Certificate c = finite_index_in_borel_unipotent(gens(l, {"C1", "x", "y", "z"}), l.flag);
    EXPECT_EQ(c.lie_dim, 4u) << ex.name;
    EXPECT_EQ(c.kind, CertificateKind::LieClosure);
    EXPECT_TRUE(revalidate(c, l.env));
  }
  Loaded l = load(ts::phi10_example());
  try {
    finite_index_in_borel_unipotent(gens(l, {"x"}), l.flag);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientClosure);
    EXPECT_EQ(e.detail(), "1");
  }
  EXPECT_EQ(code_of([&] { finite_index_in_borel_unipotent(gens(l, {"C3"}), l.flag); }), ErrorCode::ShapeMismatch);
}

TEST(FindWitness, DepthZeroFindsNothing) {
  Loaded l = load(ts::phi10_example());
  WitnessSearchOptions opts;
  opts.depth = 0;
  EXPECT_FALSE(find_unipotent_witness(l.env, l.flag, opts).has_value());
}

TEST(FindWitness, FindsAndRevalidatesDeterministically) {
  for (auto ex : {ts::mixed_example(), ts::phi4phi6_example()}) {
    Loaded l = load(ex);
    for (const char* n : {"C1", "C2", "C3"}) l.env.matrices[n] = named(l, n);
    auto a = find_unipotent_witness(l.env, l.flag, 6);
    ASSERT_TRUE(a.has_value()) << ex.name;
    auto b = find_unipotent_witness(l.env, l.flag, 6);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(to_string(a->witness_word), to_string(b->witness_word));
    EXPECT_TRUE(in_unipotent_radical(a->witness_matrix, l.flag));
    EXPECT_TRUE(acts_nontrivially_on_w(a->witness_matrix, l.flag));
    EXPECT_TRUE(revalidate(*a, l.env)) << to_string(a->witness_word);
    Certificate forged = *a;
    forged.witness_word = parse_word("C1");
    EXPECT_FALSE(revalidate(forged, l.env));
  }
}

TEST(FindWitness, RequiresBoundGenerators) {
  Loaded l = load(ts::phi10_example());
  WordEnv env;
  env.matrices["C1"] = l.md.C;
  EXPECT_EQ(code_of([&] { find_unipotent_witness(env, l.flag, 2); }), ErrorCode::UnboundSymbol);
}
