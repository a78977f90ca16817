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

#include "hypergeo/criterion.hpp"

#include <unordered_set>

#include "hypergeo/errors.hpp"

namespace hypergeo {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ArithmeticThm1: return "ArithmeticThm1";
    case Verdict::ArithmeticCertificate: return "ArithmeticCertificate";
    case Verdict::KnownThin: return "KnownThin";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::ArithmeticThm1, Verdict::ArithmeticCertificate, Verdict::KnownThin,
                    Verdict::Undetermined})
    if (to_string(v) == text) return v;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(text) + "'");
}

int verdict_rank(Verdict v) {
  switch (v) {
    case Verdict::ArithmeticThm1: return 3;
    case Verdict::ArithmeticCertificate: return 2;
    case Verdict::KnownThin: return 1;
    case Verdict::Undetermined: return 0;
  }
  return 0;
}

std::string Sl2Word::str() const {
  std::string out;
  for (const auto& [gen, e] : letters) {
    if (!out.empty()) out += " ";
    out += gen == 0 ? "M1" : "M2";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

RatMat levi_generator(int gen, const BigInt& c) {
  RatMat m = RatMat::identity(2);
  if (gen == 0) m(0, 1) = Rat(BigInt(-c));
  else m(1, 0) = Rat(c);
  return m;
}

void push_reduced(std::vector<std::pair<int, long>>& out, int gen, long e) {
  if (e == 0) return;
  if (!out.empty() && out.back().first == gen) {
    out.back().second += e;
    if (out.back().second == 0) out.pop_back();
    return;
  }
  out.emplace_back(gen, e);
}

// Nearest integer to p/q; callers guarantee p/q is never a half-integer.
BigInt round_div(BigInt p, BigInt q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  BigInt r;
  BigInt num = 2 * p + q, den = 2 * q;
  mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

BigInt floor_div(const BigInt& p, const BigInt& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  return r;
}

long to_long(const BigInt& x) {
  if (!x.fits_slong_p()) throw Error(ErrorCode::SizeLimit, "Levi exponent exceeds machine range");
  return x.get_si();
}

}  // namespace

RatMat eval_sl2(const Sl2Word& w, const BigInt& c) {
  RatMat r = RatMat::identity(2);
  for (const auto& [gen, e] : w.letters) r = r * mat_pow(levi_generator(gen, c), e);
  return r;
}

std::optional<Sl2Word> sl2_membership(const RatMat& m, const BigInt& c) {
  const BigInt ac = abs(c);
  if (ac != 1 && ac != 2) throw Error(ErrorCode::UnsupportedC, "|c| = " + ac.get_str());
  if (m.rows() != 2 || m.cols() != 2 || !m.is_integral() || det(m) != Rat(1)) return std::nullopt;
  BigInt a = m(0, 0).num(), b = m(0, 1).num(), cc = m(1, 0).num(), d = m(1, 1).num();
  const int step = ac == 2 ? 2 : 1;
  // raw letters: 0 = upper unipotent [[1,step],[0,1]], 1 = lower unipotent [[1,0],[step,1]].
  std::vector<std::pair<int, BigInt>> raw;
  auto apply_upper = [&](const BigInt& k) {
    a += step * k * cc;
    b += step * k * d;
    raw.emplace_back(0, BigInt(-k));
  };
  auto apply_lower = [&](const BigInt& k) {
    cc += step * k * a;
    d += step * k * b;
    raw.emplace_back(1, BigInt(-k));
  };

  if (step == 2) {
    auto even = [](const BigInt& x) { return mpz_even_p(x.get_mpz_t()) != 0; };
    if (even(a) || even(d) || !even(b) || !even(cc)) return std::nullopt;
    while (cc != 0) {
      if (abs(a) > abs(cc)) apply_upper(BigInt(-round_div(a, 2 * cc)));
      else apply_lower(BigInt(-round_div(cc, 2 * a)));
    }
    if (a != 1) return std::nullopt;
    raw.emplace_back(0, BigInt(b / 2));
  } else {
    while (cc != 0) {
      if (a == 0) apply_upper(cc);  // det 1 forces cc = +-1, so a becomes 1
      else if (abs(a) > abs(cc)) apply_upper(BigInt(-floor_div(a, cc)));
      else apply_lower(BigInt(-floor_div(cc, a)));
    }
    if (a == 1) {
      raw.emplace_back(0, b);
    } else {
      // -I = (U L^-1 U)^2
      for (int rep = 0; rep < 2; ++rep) {
        raw.emplace_back(0, BigInt(1));
        raw.emplace_back(1, BigInt(-1));
        raw.emplace_back(0, BigInt(1));
      }
      raw.emplace_back(0, BigInt(-b));
    }
  }

  const int s = sgn(c);
  Sl2Word w;
  for (const auto& [gen, e] : raw) push_reduced(w.letters, gen, to_long(e) * (gen == 0 ? -s : s));
  if (!(eval_sl2(w, c) == m)) throw Error(ErrorCode::InternalInconsistency, "Levi word does not evaluate back");
  return w;
}

namespace {

struct LeviShape {
  bool ok = false;
  Rat t;
};

LeviShape levi_shape(const RatMat& mi, const RatMat& mj) {
  LeviShape s;
  if (mi(0, 0) != Rat(1) || mi(1, 0) != Rat(0) || mi(1, 1) != Rat(1)) return s;
  if (mj(0, 0) != Rat(1) || mj(0, 1) != Rat(0) || mj(1, 1) != Rat(1)) return s;
  if (mi(0, 1) != -mj(1, 0)) return s;
  s.ok = true;
  s.t = mj(1, 0);
  return s;
}

}  // namespace

LeviPair levi_matrices(const TransvectionTriple& triple) {
  std::vector<RatVec> basis{triple.w[0], triple.w[1]};
  LeviPair p{restrict_to_subspace(triple.C[0].matrix, basis),
             restrict_to_subspace(triple.C[1].matrix, basis), Rat(0)};
  LeviShape s = levi_shape(p.M1, p.M2);
  if (!s.ok) throw Error(ErrorCode::InternalInconsistency, "Levi matrices do not have the expected shape");
  p.t = s.t;
  return p;
}

TransvectionTriple build_triple(const MonodromyData& md, const DifferenceProfile& profile) {
  const auto k = static_cast<std::size_t>(profile.k);
  TransvectionTriple t;
  try {
    t = make_triple(md, LetterWord(k, 1), TripleOrigin::PowerOfA);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TripleDegenerate) throw;
    try {
      t = make_triple(md, LetterWord(k, 3), TripleOrigin::PowerOfB);
    } catch (const Error& e2) {
      if (e2.code() != ErrorCode::TripleDegenerate) throw;
      throw Error(ErrorCode::TripleDegenerate, "both A- and B-conjugates are degenerate");
    }
  }
  if (levi_matrices(t).t != Rat(profile.c))
    throw Error(ErrorCode::InternalInconsistency, "Levi parameter differs from the leading coefficient");
  return t;
}

std::optional<TransvectionTriple> extended_triple_search(const MonodromyData& md, int depth) {
  const std::size_t n = static_cast<std::size_t>(md.n);
  if (n < 4) return std::nullopt;
  const std::array<RatMat, 4> gens{md.A, mat_inv(md.A), md.B, mat_inv(md.B)};
  struct Node {
    LetterWord word;
    RatMat mat, inv;
  };
  std::unordered_set<RatMat, RatMatHash> seen{RatMat::identity(n)};
  std::vector<Node> level{{{}, RatMat::identity(n), RatMat::identity(n)}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (int l = 0; l < 4; ++l) {
        if (!node.word.empty() && (node.word.back() ^ 1) == l) continue;
        Node child{node.word, node.mat * gens[static_cast<std::size_t>(l)],
                   gens[static_cast<std::size_t>(l ^ 1)] * node.inv};
        if (!seen.insert(child.mat).second) continue;
        child.word.push_back(l);
        RatVec gv = child.mat * md.v;
        Rat coef = gv[n - 1].abs();
        if ((coef == Rat(1) || coef == Rat(2)) &&
            rank_of_vectors({md.v, gv, child.inv * md.v}) == 3 &&
            !form_value(md.omega, md.v, gv).is_zero())
          return make_triple(md, child.word, TripleOrigin::Conjugator);
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

Classification classify_thm1(const IntPoly& f, const IntPoly& g) {
  require_admissible(check_hypotheses(f, g));
  DifferenceProfile p = difference_profile(f, g);
  Classification c;
  if (abs(p.c) <= 2) {
    c.verdict = Verdict::ArithmeticThm1;
    c.method = "leading coefficient |c| = " + abs(p.c).get_str() + " <= 2";
  } else {
    c.verdict = Verdict::Undetermined;
    c.method = "fast path only: |c| = " + abs(p.c).get_str();
  }
  return c;
}

namespace {

const char* kC[3] = {"C1", "C2", "C3"};

Word sl2_to_word(const Sl2Word& w, int i, int j) {
  Word out;
  for (const auto& [gen, e] : w.letters) out.append(Word::symbol(kC[gen == 0 ? i : j], e));
  return out;
}

std::optional<ArithmeticCertificate> constructive(const MonodromyData& md, const TransvectionTriple& tr,
                                                  const FlagBasis& flag, const Limits& limits) {
  const std::array<std::array<int, 3>, 3> orders{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& o : orders) {
    const int i = o[0], j = o[1], k = o[2];
    const RatVec& wi = tr.w[static_cast<std::size_t>(i)];
    const RatVec& wj = tr.w[static_cast<std::size_t>(j)];
    if (form_value(md.omega, wi, wj).is_zero()) continue;
    const RatMat& Ci = tr.C[static_cast<std::size_t>(i)].matrix;
    const RatMat& Cj = tr.C[static_cast<std::size_t>(j)].matrix;
    const RatMat& Ck = tr.C[static_cast<std::size_t>(k)].matrix;
    LeviShape s = levi_shape(restrict_to_subspace(Ci, {wi, wj}), restrict_to_subspace(Cj, {wi, wj}));
    if (!s.ok || !s.t.is_integer()) continue;
    const BigInt t = s.t.num();
    if (abs(t) != 1 && abs(t) != 2) continue;

    RatMat r = restrict_to_subspace(Ck, {flag.e(), wi, wj});
    RatMat g(2, 2);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) g(a, b) = r(a + 1, b + 1);
    RatMat gm = RatMat::identity(2);
    for (int m = 1; m <= limits.power_bound; ++m) {
      gm = gm * g;
      if (!gm.is_integral()) continue;
      auto u = sl2_membership(gm, t);
      if (!u) continue;
      RatMat h = RatMat::identity(Ci.rows());
      for (const auto& [gen, e] : u->letters) h = h * mat_pow(gen == 0 ? Ci : Cj, e);
      RatMat witness = mat_pow(Ck, m) * mat_inv(h);
      if (witness.is_identity() || !in_unipotent_radical(witness, flag) || !acts_nontrivially_on_w(witness, flag))
        continue;
      ArithmeticCertificate cert;
      cert.path = "constructive";
      cert.order = o;
      cert.t = s.t;
      cert.m = m;
      cert.sl2_word = *u;
      Word w = Word::symbol(kC[k], m);
      if (!u->empty()) w.append(Word::group(sl2_to_word(*u, i, j), -1));
      cert.witness.kind = CertificateKind::UnipotentRadical;
      cert.witness.witness_word = std::move(w);
      cert.witness.witness_matrix = std::move(witness);
      cert.witness.flag = flag;
      return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

Classification check_thm2(const MonodromyData& md, const TransvectionTriple& triple, const Limits& limits) {
  if (md.n < 4) throw Error(ErrorCode::HypothesisViolation, "the transvection criterion needs n >= 4");
  if (rank_of_vectors({triple.w[0], triple.w[1], triple.w[2]}) != 3)
    throw Error(ErrorCode::HypothesisViolation, "span(w1,w2,w3) is not 3-dimensional");
  bool nonzero = false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      nonzero = nonzero || !form_value(md.omega, triple.w[static_cast<std::size_t>(i)],
                                       triple.w[static_cast<std::size_t>(j)]).is_zero();
  if (!nonzero) throw Error(ErrorCode::HypothesisViolation, "Omega vanishes on span(w1,w2,w3)");

  FlagBasis flag = flag_basis(triple, md.omega);
  auto fill = [&](ArithmeticCertificate cert) {
    cert.f = md.f;
    cert.g = md.g;
    cert.origin = triple.origin;
    cert.conjugator = triple.conjugator;
    Classification c;
    c.verdict = Verdict::ArithmeticCertificate;
    c.method = "transvection criterion (" + cert.path + ", conjugator " +
               letters_to_string(triple.conjugator) + ")";
    c.certificate = std::move(cert);
    return c;
  };

  if (auto cert = constructive(md, triple, flag, limits)) return fill(std::move(*cert));

  WordEnv env;
  for (std::size_t i = 0; i < 3; ++i) env.matrices[kC[i]] = triple.C[i].matrix;
  WitnessSearchOptions opts;
  opts.depth = limits.depth;
  opts.commutators = limits.commutator_refinement;
  if (auto w = find_unipotent_witness(env, flag, opts)) {
    ArithmeticCertificate cert;
    cert.path = "search";
    cert.witness = std::move(*w);
    return fill(std::move(cert));
  }
  Classification c;
  c.method = "no witness within depth " + std::to_string(limits.depth) + ", power bound " +
             std::to_string(limits.power_bound);
  return c;
}

Classification classify(const IntPoly& f, const IntPoly& g, const Limits& limits) {
  Classification fast = classify_thm1(f, g);
  MonodromyData md = monodromy_pair(f, g, FormNormalization::PrimitiveInteger);
  if (md.n < 4) return fast;
  DifferenceProfile profile = difference_profile(f, g);
  TransvectionTriple triple = build_triple(md, profile);

  Classification viaPowers = check_thm2(md, triple, limits);
  if (fast.verdict == Verdict::ArithmeticThm1) {
    fast.certificate = viaPowers.certificate;
    return fast;
  }
  if (viaPowers.certificate) return viaPowers;

  if (auto ext = extended_triple_search(md, limits.depth)) {
    Classification viaConj = check_thm2(md, *ext, limits);
    if (viaConj.certificate) return viaConj;
  }
  Classification c;
  c.method = "no certificate within depth " + std::to_string(limits.depth) + ", power bound " +
             std::to_string(limits.power_bound);
  return c;
}

WordEnv certificate_env(const MonodromyData& md, const ArithmeticCertificate& cert) {
  RatMat gm = eval_letters(cert.conjugator, md.A, md.B);
  RatMat gi = mat_inv(gm);
  WordEnv env;
  env.matrices["A"] = md.A;
  env.matrices["B"] = md.B;
  env.matrices["C1"] = md.C;
  env.matrices["C2"] = gm * md.C * gi;
  env.matrices["C3"] = gi * md.C * gm;
  return env;
}

nlohmann::json to_json(const ArithmeticCertificate& cert, Verdict verdict, const std::string& citation) {
  const bool constructive = cert.path == "constructive";
  using nlohmann::json;
  return {{"pair", {{"f", render(cert.f)}, {"g", render(cert.g)}}},
          {"triple_origin", to_string(cert.origin)},
          {"conjugator_word", letters_to_string(cert.conjugator)},
          {"path", cert.path},
          {"levi_pair", constructive ? json::array({cert.order[0] + 1, cert.order[1] + 1}) : json(nullptr)},
          {"t", constructive ? to_json(cert.t) : json(nullptr)},
          {"m", constructive ? json(cert.m) : json(nullptr)},
          {"sl2_word", constructive ? json(cert.sl2_word.str()) : json(nullptr)},
          {"witness_word", to_string(cert.witness.witness_word)},
          {"witness", to_json(cert.witness)},
          {"verdict", to_string(verdict)},
          {"citation", citation}};
}

namespace {

LetterWord word_to_letters(const Word& w) {
  LetterWord out;
  for (const auto& a : w.atoms) {
    if (a.kind != Atom::Kind::Symbol || (a.symbol != "A" && a.symbol != "B"))
      throw Error(ErrorCode::ParseError, "conjugator must be a word in A and B");
    int base = a.symbol == "A" ? 0 : 2;
    int letter = a.exponent > 0 ? base : base + 1;
    for (long i = 0; i < std::abs(a.exponent); ++i) out.push_back(letter);
  }
  return out;
}

}  // namespace

bool recheck_certificate(const nlohmann::json& j) {
  try {
    Verdict v = parse_verdict(j.at("verdict").get<std::string>());
    if (v != Verdict::ArithmeticCertificate && v != Verdict::ArithmeticThm1) return false;
    IntPoly f = parse_poly(j.at("pair").at("f").get<std::string>());
    IntPoly g = parse_poly(j.at("pair").at("g").get<std::string>());
    MonodromyData md = monodromy_pair(f, g, FormNormalization::PrimitiveInteger);
    LetterWord gamma = word_to_letters(parse_word(j.at("conjugator_word").get<std::string>()));
    TripleOrigin origin = TripleOrigin::Conjugator;
    for (TripleOrigin o : {TripleOrigin::PowerOfA, TripleOrigin::PowerOfB, TripleOrigin::Conjugator})
      if (to_string(o) == j.at("triple_origin").get<std::string>()) origin = o;
    TransvectionTriple triple = make_triple(md, gamma, origin);
    FlagBasis flag = flag_basis(triple, md.omega);
    WordEnv env;
    for (std::size_t i = 0; i < 3; ++i) env.matrices[kC[i]] = triple.C[i].matrix;
    RatMat w = eval_word(parse_word(j.at("witness_word").get<std::string>()), env);
    if (j.contains("witness") && j.at("witness").contains("witness_matrix") &&
        !(mat_from_json(j.at("witness").at("witness_matrix")) == w))
      return false;
    return !w.is_identity() && in_unipotent_radical(w, flag) && acts_nontrivially_on_w(w, flag) &&
           rootgroup_shape_identity(w, flag);
  } catch (const Error&) {
    return false;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

bool recheck_certificate(const ArithmeticCertificate& cert) {
  return recheck_certificate(to_json(cert, Verdict::ArithmeticCertificate, ""));
}

}  // namespace hypergeo
