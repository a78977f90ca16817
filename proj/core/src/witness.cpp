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

#include "hypergeo/witness.hpp"

#include <cstdint>
#include <unordered_set>

#include "hypergeo/errors.hpp"

namespace hypergeo {

std::vector<RatVec> FlagBasis::x_perp() const {
  if (vectors.size() <= 4) return {};
  return std::vector<RatVec>(vectors.begin() + 2, vectors.end() - 2);
}

RatMat FlagBasis::to_flag(const RatMat& m) const {
  return solve(change_of_basis, m * change_of_basis);
}

RatMat FlagBasis::from_flag(const RatMat& m) const {
  return change_of_basis * m * mat_inv(change_of_basis);
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::UnipotentRadical: return "UnipotentRadical";
    case CertificateKind::RootGroupPair: return "RootGroupPair";
    case CertificateKind::LieClosure: return "LieClosure";
  }
  return "?";
}

namespace {

void finish_flag(FlagBasis& fb) {
  const std::size_t n = fb.vectors.size();
  fb.change_of_basis = RatMat::from_columns(fb.vectors);
  if (det(fb.change_of_basis).is_zero()) throw Error(ErrorCode::DegenerateFlag, "flag vectors are dependent");
  fb.lambda1 = form_value(fb.omega, fb.vectors[0], fb.vectors[n - 1]);
  fb.lambda2 = form_value(fb.omega, fb.vectors[1], fb.vectors[n - 2]);
  if (fb.lambda1.is_zero() || fb.lambda2.is_zero())
    throw Error(ErrorCode::DegenerateFlag, "flag pairing vanishes");
}

}  // namespace

FlagBasis flag_basis(const TransvectionTriple& triple, const RatMat& omega) {
  const std::size_t n = omega.rows();
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::DegenerateFlag, "flag needs even n >= 4");
  FlagBasis fb;
  fb.omega = omega;

  const std::array<std::array<int, 2>, 3> order{{{0, 1}, {0, 2}, {1, 2}}};
  bool found = false;
  for (const auto& p : order) {
    if (!form_value(omega, triple.w[p[0]], triple.w[p[1]]).is_zero()) {
      fb.pair = p;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::DegenerateFlag, "Omega vanishes on W");
  const RatVec& w1 = triple.w[fb.pair[0]];
  const RatVec& w2 = triple.w[fb.pair[1]];
  const Rat lambda = form_value(omega, w1, w2);

  RatMat gram(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gram(i, j) = form_value(omega, triple.w[i], triple.w[j]);
  auto ker = kernel(gram);
  if (ker.size() != 1) throw Error(ErrorCode::DegenerateFlag, "radical of Omega on W is not a line");
  RatVec e(n, Rat(0));
  for (std::size_t i = 0; i < 3; ++i) e = vec_add(e, vec_scale(triple.w[i], ker[0][i]));
  e = primitive_integer(e);

  RatVec estar;
  for (std::size_t j = 0; j < n && estar.empty(); ++j) {
    RatVec ej = unit_vector(n, j);
    if (form_value(omega, e, ej).is_zero()) continue;
    RatVec t = vec_sub(ej, vec_scale(w1, form_value(omega, ej, w2) / lambda));
    estar = primitive_integer(vec_add(t, vec_scale(w2, form_value(omega, ej, w1) / lambda)));
  }
  if (estar.empty()) throw Error(ErrorCode::DegenerateFlag, "no dual vector for e");

  std::vector<RatVec> lower{e, w1}, upper{w2, estar};
  if (n > 4) {
    RatMat cons(4, n);
    const std::array<const RatVec*, 4> xs{&e, &w1, &w2, &estar};
    for (std::size_t i = 0; i < 4; ++i) {
      RatVec row = transpose(omega) * *xs[i];
      for (std::size_t j = 0; j < n; ++j) cons(i, j) = row[j];
    }
    std::vector<RatVec> rest = kernel(cons);
    std::vector<RatVec> as, bs;
    while (!rest.empty()) {
      RatVec a = rest.front();
      std::size_t k = 1;
      while (k < rest.size() && form_value(omega, a, rest[k]).is_zero()) ++k;
      if (k == rest.size()) throw Error(ErrorCode::DegenerateFlag, "complement is degenerate");
      RatVec b = vec_scale(rest[k], form_value(omega, a, rest[k]).inverse());
      std::vector<RatVec> next;
      for (std::size_t i = 1; i < rest.size(); ++i) {
        if (i == k) continue;
        const RatVec& y = rest[i];
        RatVec yy = vec_sub(y, vec_scale(a, form_value(omega, y, b)));
        next.push_back(vec_add(yy, vec_scale(b, form_value(omega, y, a))));
      }
      as.push_back(a);
      bs.push_back(b);
      rest = std::move(next);
    }
    lower.insert(lower.end(), as.begin(), as.end());
    std::vector<RatVec> tail(bs.rbegin(), bs.rend());
    tail.insert(tail.end(), upper.begin(), upper.end());
    upper = std::move(tail);
  }
  fb.vectors = lower;
  fb.vectors.insert(fb.vectors.end(), upper.begin(), upper.end());
  finish_flag(fb);
  return fb;
}

FlagBasis flag_from_columns(const RatMat& p, const RatMat& omega) {
  if (!p.square() || p.rows() != omega.rows() || p.rows() < 4)
    throw Error(ErrorCode::DimensionMismatch, "flag basis must be a full square basis");
  FlagBasis fb;
  fb.omega = omega;
  for (std::size_t j = 0; j < p.cols(); ++j) fb.vectors.push_back(p.col(j));
  finish_flag(fb);
  return fb;
}

namespace {

bool in_line(const RatVec& x, const RatVec& e) {
  return vec_is_zero(x) || rank_of_vectors({x, e}) == 1;
}

}  // namespace

bool in_unipotent_radical(const RatMat& m, const FlagBasis& flag) {
  const std::size_t n = flag.n();
  if (!m.square() || m.rows() != n) return false;
  RatMat d = m - RatMat::identity(n);
  if (!vec_is_zero(d * flag.e())) return false;
  if (!in_line(d * flag.w1(), flag.e()) || !in_line(d * flag.w2(), flag.e())) return false;
  if (!coordinates_in({flag.e(), flag.w1(), flag.w2()}, d * flag.e_star())) return false;
  for (const auto& y : flag.x_perp())
    if (!vec_is_zero(d * y)) return false;
  return true;
}

bool in_borel_unipotent(const RatMat& m, const FlagBasis& flag) {
  RatMat f = flag.to_flag(m);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (f(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

bool acts_nontrivially_on_w(const RatMat& m, const FlagBasis& flag) {
  RatMat d = m - RatMat::identity(flag.n());
  return !vec_is_zero(d * flag.w1()) || !vec_is_zero(d * flag.w2()) || !vec_is_zero(d * flag.e());
}

bool rootgroup_shape_identity(const RatMat& m, const FlagBasis& flag) {
  const std::size_t n = flag.n();
  RatMat f = flag.to_flag(m);
  const Rat ratio = flag.lambda1 / flag.lambda2;
  return f(1, n - 1) == ratio * f(0, n - 2) && f(n - 2, n - 1) == -ratio * f(0, 1);
}

Certificate rootgroup_witnesses(const std::vector<std::pair<Word, RatMat>>& candidates,
                                const FlagBasis& flag) {
  const std::size_t n = flag.n();
  const std::array<std::size_t, 4> idx{0, 1, n - 2, n - 1};
  const Rat ratio = flag.lambda1 / flag.lambda2;
  for (const auto& [word, mat] : candidates) {
    if (!in_unipotent_radical(mat, flag)) continue;
    RatMat f = flag.to_flag(mat);
    Rat y2 = f(0, n - 2), z = f(0, n - 1);
    RatMat expect = RatMat::identity(4);
    expect(0, 2) = y2;
    expect(0, 3) = z;
    expect(1, 3) = ratio * y2;
    bool ok = !(y2.is_zero() && z.is_zero());
    for (std::size_t i = 0; ok && i < 4; ++i)
      for (std::size_t j = 0; ok && j < 4; ++j) ok = f(idx[i], idx[j]) == expect(i, j);
    if (!ok) continue;
    Certificate c;
    c.kind = CertificateKind::RootGroupPair;
    c.witness_word = word;
    c.witness_matrix = mat;
    c.flag = flag;
    c.y2 = y2;
    c.z = z;
    return c;
  }
  throw Error(ErrorCode::ShapeMismatch, "no candidate has the root group shape");
}

Certificate finite_index_in_borel_unipotent(const std::vector<std::pair<Word, RatMat>>& gens,
                                            const FlagBasis& flag) {
  std::vector<RatMat> logs;
  Certificate c;
  c.kind = CertificateKind::LieClosure;
  c.flag = flag;
  for (const auto& [word, mat] : gens) {
    if (!in_borel_unipotent(mat, flag))
      throw Error(ErrorCode::ShapeMismatch, "generator is not upper unitriangular in flag coordinates");
    logs.push_back(nilpotent_log(flag.to_flag(mat)));
    c.generator_words.push_back(word);
    c.generator_matrices.push_back(mat);
  }
  const std::size_t half = flag.n() / 2;
  c.lie_dim = lie_closure_dim(logs);
  if (c.lie_dim != half * half)
    throw Error(ErrorCode::InsufficientClosure, std::to_string(c.lie_dim));
  if (!gens.empty()) {
    c.witness_word = gens.front().first;
    c.witness_matrix = gens.front().second;
  }
  return c;
}

namespace {

const char* kLetterNames[3] = {"C1", "C2", "C3"};

Word letters_to_word(const std::vector<std::uint8_t>& w) {
  Word out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long e = static_cast<long>(j - i) * ((w[i] & 1U) ? -1 : 1);
    out.append(Word::symbol(kLetterNames[w[i] / 2], e));
    i = j;
  }
  return out;
}

struct Node {
  std::vector<std::uint8_t> letters;
  RatMat mat;
};

bool is_witness(const RatMat& m, const FlagBasis& flag, const RatVec& e) {
  RatVec me = m * e;
  if (me != e) return false;
  return !m.is_identity() && in_unipotent_radical(m, flag) && acts_nontrivially_on_w(m, flag);
}

Certificate make_witness(Word w, RatMat m, const FlagBasis& flag) {
  Certificate c;
  c.kind = CertificateKind::UnipotentRadical;
  c.witness_word = std::move(w);
  c.witness_matrix = std::move(m);
  c.flag = flag;
  return c;
}

}  // namespace

std::optional<Certificate> find_unipotent_witness(const WordEnv& env, const FlagBasis& flag,
                                                  const WitnessSearchOptions& opts) {
  if (opts.depth <= 0) return std::nullopt;
  std::array<RatMat, 6> gens;
  for (std::size_t k = 0; k < 3; ++k) {
    auto it = env.matrices.find(kLetterNames[k]);
    if (it == env.matrices.end()) throw Error(ErrorCode::UnboundSymbol, kLetterNames[k]);
    gens[2 * k] = it->second;
    gens[2 * k + 1] = mat_inv(it->second);
  }
  const std::size_t n = flag.n();
  const RatVec& e = flag.e();

  std::unordered_set<RatMat, RatMatHash> seen;
  std::vector<Node> level{{{}, RatMat::identity(n)}};
  std::vector<Node> shorts;  // distinct words of length <= depth/2 for the commutator pass
  const std::size_t short_len = static_cast<std::size_t>(opts.depth / 2);
  seen.insert(level[0].mat);
  for (int len = 1; len <= opts.depth; ++len) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (std::uint8_t l = 0; l < 6; ++l) {
        if (!node.letters.empty() && (node.letters.back() ^ 1U) == l) continue;
        RatMat m = node.mat * gens[l];
        if (!seen.insert(m).second) continue;
        Node child{node.letters, std::move(m)};
        child.letters.push_back(l);
        if (is_witness(child.mat, flag, e)) return make_witness(letters_to_word(child.letters), child.mat, flag);
        next.push_back(std::move(child));
      }
    }
    if (static_cast<std::size_t>(len) <= short_len)
      shorts.insert(shorts.end(), next.begin(), next.end());
    level = std::move(next);
  }

  if (!opts.commutators) return std::nullopt;
  std::vector<RatMat> inverses;
  for (const auto& s : shorts) inverses.push_back(mat_inv(s.mat));
  for (std::size_t i = 0; i < shorts.size(); ++i) {
    for (std::size_t j = i + 1; j < shorts.size(); ++j) {
      RatMat k = shorts[i].mat * shorts[j].mat * inverses[i] * inverses[j];
      if (is_witness(k, flag, e))
        return make_witness(Word::commutator(letters_to_word(shorts[i].letters),
                                             letters_to_word(shorts[j].letters)),
                            std::move(k), flag);
    }
  }
  return std::nullopt;
}

std::optional<Certificate> find_unipotent_witness(const WordEnv& env, const FlagBasis& flag, int depth) {
  WitnessSearchOptions opts;
  opts.depth = depth;
  return find_unipotent_witness(env, flag, opts);
}

bool revalidate(const Certificate& cert, const WordEnv& env) {
  switch (cert.kind) {
    case CertificateKind::UnipotentRadical: {
      RatMat m = eval_word(cert.witness_word, env);
      return m == cert.witness_matrix && in_unipotent_radical(m, cert.flag) &&
             acts_nontrivially_on_w(m, cert.flag) && rootgroup_shape_identity(m, cert.flag);
    }
    case CertificateKind::RootGroupPair: {
      RatMat m = eval_word(cert.witness_word, env);
      if (!(m == cert.witness_matrix)) return false;
      try {
        Certificate again = rootgroup_witnesses({{cert.witness_word, m}}, cert.flag);
        return again.y2 == cert.y2 && again.z == cert.z;
      } catch (const Error&) {
        return false;
      }
    }
    case CertificateKind::LieClosure: {
      std::vector<std::pair<Word, RatMat>> gens;
      for (std::size_t i = 0; i < cert.generator_words.size(); ++i) {
        RatMat m = eval_word(cert.generator_words[i], env);
        if (!(m == cert.generator_matrices[i])) return false;
        gens.emplace_back(cert.generator_words[i], m);
      }
      try {
        return finite_index_in_borel_unipotent(gens, cert.flag).lie_dim == cert.lie_dim;
      } catch (const Error&) {
        return false;
      }
    }
  }
  return false;
}

nlohmann::json to_json(const FlagBasis& flag) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : flag.vectors) vs.push_back(to_json(v));
  return {{"vectors", vs},
          {"lambda1", to_json(flag.lambda1)},
          {"lambda2", to_json(flag.lambda2)},
          {"omega_in_flag", to_json(form_in_basis(flag.omega, flag.change_of_basis))}};
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j = {{"kind", to_string(cert.kind)},
                      {"witness_word", to_string(cert.witness_word)},
                      {"witness_matrix", to_json(cert.witness_matrix)},
                      {"witness_in_flag", to_json(cert.flag.to_flag(cert.witness_matrix))},
                      {"flag", to_json(cert.flag)}};
  if (cert.kind == CertificateKind::RootGroupPair) {
    j["y2"] = to_json(cert.y2);
    j["z"] = to_json(cert.z);
  }
  if (cert.kind == CertificateKind::LieClosure) {
    j["lie_dim"] = cert.lie_dim;
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : cert.generator_words) ws.push_back(to_string(w));
    j["generator_words"] = ws;
  }
  return j;
}

}  // namespace hypergeo
