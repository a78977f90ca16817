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

#include "hypergeo/monodromy.hpp"

#include "hypergeo/errors.hpp"
#include "hypergeo/hypotheses.hpp"

namespace hypergeo {

std::string to_string(FormNormalization n) {
  return n == FormNormalization::Unit12 ? "unit12" : "primitive";
}

FormNormalization parse_normalization(std::string_view text) {
  if (text == "unit12") return FormNormalization::Unit12;
  if (text == "primitive") return FormNormalization::PrimitiveInteger;
  throw Error(ErrorCode::ParseError, "unknown normalization '" + std::string(text) + "'");
}

std::string to_string(TripleOrigin o) {
  switch (o) {
    case TripleOrigin::PowerOfA: return "PowerOfA";
    case TripleOrigin::PowerOfB: return "PowerOfB";
    case TripleOrigin::Conjugator: return "Conjugator";
  }
  return "?";
}

RatMat companion(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw Error(ErrorCode::NotMonic, render(f));
  const auto n = static_cast<std::size_t>(f.degree());
  RatMat m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = Rat(BigInt(-f.coeff(static_cast<int>(i))));
  return m;
}

Rat form_value(const RatMat& omega, const RatVec& x, const RatVec& y) {
  RatVec oy = omega * y;
  Rat acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) acc += x[i] * oy[i];
  return acc;
}

bool preserves_form(const RatMat& t, const RatMat& omega) {
  return transpose(t) * omega * t == omega;
}

RatMat form_in_basis(const RatMat& omega, const RatMat& p) {
  return transpose(p) * omega * p;
}

RatMat invariant_form(const RatMat& a, const RatMat& b, FormNormalization normalization) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, "invariant_form needs two square matrices of equal size");
  const std::size_t n = a.rows();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) unknowns.emplace_back(p, q);

  // Row (i,j), i<j, of M^T W M - W for the basis form E_pq - E_qp.
  // Held as rows: the system has O(n^2) unknowns and may exceed kMaxDimension for moderate n.
  std::vector<RatVec> sys(2 * unknowns.size(), RatVec(unknowns.size()));
  std::size_t row = 0;
  for (const RatMat* m : {&a, &b}) {
    const RatMat& M = *m;
    for (const auto& [i, j] : unknowns) {
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        auto [p, q] = unknowns[u];
        Rat v = M(p, i) * M(q, j) - M(q, i) * M(p, j);
        if (p == i && q == j) v -= 1;
        sys[row][u] = v;
      }
      ++row;
    }
  }
  auto ker = kernel(sys, unknowns.size());
  if (ker.empty()) throw Error(ErrorCode::NoInvariantForm, "no invariant antisymmetric form");
  if (ker.size() > 1)
    throw Error(ErrorCode::NonUniqueForm, std::to_string(ker.size()) + "-dimensional solution space");

  RatMat omega(n, n);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    auto [p, q] = unknowns[u];
    omega(p, q) = ker[0][u];
    omega(q, p) = -ker[0][u];
  }
  if (det(omega).is_zero()) throw Error(ErrorCode::DegenerateForm, "invariant form is degenerate");
  if (normalization == FormNormalization::Unit12) {
    if (omega(0, 1).is_zero())
      throw Error(ErrorCode::NormalizationUndefined, "Omega(e1,e2) = 0");
    omega *= omega(0, 1).inverse();
  }
  return omega;
}

MonodromyData monodromy_pair(const IntPoly& f, const IntPoly& g, FormNormalization normalization) {
  require_admissible(check_hypotheses(f, g));
  MonodromyData md;
  md.n = f.degree();
  md.f = f;
  md.g = g;
  md.A = companion(f);
  md.B = companion(g);
  md.C = mat_inv(md.A) * md.B;
  const auto n = static_cast<std::size_t>(md.n);

  RatMat block = md.C;
  for (std::size_t i = 0; i + 1 < n; ++i) block(i, n - 1) = 0;
  if (!block.is_identity())
    throw Error(ErrorCode::InternalInconsistency, "C = A^-1 B is not of block form");
  md.v = md.C.col(n - 1);
  md.v[n - 1] = 0;

  IntPoly h = f - g;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (md.v[i] != Rat(h.coeff(static_cast<int>(i) + 1)))
      throw Error(ErrorCode::InternalInconsistency, "v does not match the coefficients of f - g");

  md.omega = invariant_form(md.A, md.B, normalization);
  md.normalization = normalization;

  if (!(transpose(md.omega) == md.omega * Rat(-1)) || !preserves_form(md.A, md.omega) ||
      !preserves_form(md.B, md.omega))
    throw Error(ErrorCode::InternalInconsistency, "invariant form check failed");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!form_value(md.omega, md.v, unit_vector(n, i)).is_zero())
      throw Error(ErrorCode::InternalInconsistency, "v is not orthogonal to e_i");
  std::vector<RatVec> krylov{md.v};
  for (std::size_t i = 1; i < n; ++i) krylov.push_back(md.A * krylov.back());
  if (rank_of_vectors(krylov) != n) throw Error(ErrorCode::InternalInconsistency, "v is not cyclic for A");
  return md;
}

TransvectionData as_transvection(const RatMat& t, const RatMat& omega) {
  if (!t.square() || t.rows() != omega.rows())
    throw Error(ErrorCode::DimensionMismatch, "as_transvection");
  const std::size_t n = t.rows();
  RatMat nmat = t - RatMat::identity(n);
  if (rank(nmat) != 1) throw Error(ErrorCode::NotTransvection, "rank(T - I) != 1");
  if (!(nmat * nmat).is_zero()) throw Error(ErrorCode::NotTransvection, "(T - I)^2 != 0");
  RatVec w;
  for (std::size_t j = 0; j < n && w.empty(); ++j) {
    RatVec c = nmat.col(j);
    if (!vec_is_zero(c)) w = primitive_integer(c);
  }
  RatVec u = omega * w;
  // T - I = mu * w u^T.
  Rat mu;
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    for (std::size_t j = 0; j < n && !found; ++j)
      if (!w[i].is_zero() && !u[j].is_zero()) {
        mu = nmat(i, j) / (w[i] * u[j]);
        found = true;
      }
  if (!found || mu.is_zero()) throw Error(ErrorCode::NotTransvection, "direction is isotropic for every vector");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (nmat(i, j) != mu * w[i] * u[j])
        throw Error(ErrorCode::NotTransvection, "T is not an Omega-transvection");
  return TransvectionData{t, w, mu};
}

std::string letters_to_string(const LetterWord& w) {
  static const char* sym[] = {"A", "A", "B", "B"};
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long e = static_cast<long>(j - i) * (w[i] % 2 == 0 ? 1 : -1);
    if (!out.empty()) out += " ";
    out += sym[w[i]];
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

RatMat eval_letters(const LetterWord& w, const RatMat& a, const RatMat& b) {
  RatMat ai = mat_inv(a), bi = mat_inv(b);
  RatMat r = RatMat::identity(a.rows());
  for (int l : w) {
    switch (l) {
      case 0: r = r * a; break;
      case 1: r = r * ai; break;
      case 2: r = r * b; break;
      case 3: r = r * bi; break;
      default: throw Error(ErrorCode::InternalInconsistency, "bad letter");
    }
  }
  return r;
}

namespace {

// (C_i - I) Z^n = Z w: every column is an integer multiple of w, multiples coprime.
bool image_lattice_is(const RatMat& t, const RatVec& w) {
  const std::size_t n = t.rows();
  std::size_t piv = 0;
  while (piv < n && w[piv].is_zero()) ++piv;
  if (piv == n) return false;
  BigInt g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    RatVec c = t.col(j);
    c[j] -= 1;
    Rat a = c[piv] / w[piv];
    if (!a.is_integer()) return false;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] != a * w[i]) return false;
    g = gcd(g, a.num());
  }
  return g == 1;
}

}  // namespace

TransvectionTriple make_triple(const MonodromyData& md, const LetterWord& gamma, TripleOrigin origin) {
  RatMat gm = eval_letters(gamma, md.A, md.B);
  RatMat gi = mat_inv(gm);
  TransvectionTriple t;
  t.origin = origin;
  t.conjugator = gamma;
  t.w = {md.v, gm * md.v, gi * md.v};
  if (rank_of_vectors({t.w[0], t.w[1], t.w[2]}) != 3)
    throw Error(ErrorCode::TripleDegenerate, "directions are linearly dependent");
  t.lambda2 = form_value(md.omega, t.w[0], t.w[1]);
  if (t.lambda2.is_zero()) throw Error(ErrorCode::TripleDegenerate, "Omega(w1,w2) = 0");
  std::array<RatMat, 3> mats = {md.C, gm * md.C * gi, gi * md.C * gm};
  for (std::size_t i = 0; i < 3; ++i) {
    t.C[i] = as_transvection(mats[i], md.omega);
    if (!parallel(t.C[i].w, t.w[i]) || !image_lattice_is(mats[i], t.w[i]))
      throw Error(ErrorCode::InternalInconsistency, "transvection direction mismatch");
  }
  return t;
}

}  // namespace hypergeo
