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

#include "hypergeo/hypotheses.hpp"

#include "hypergeo/errors.hpp"

namespace hypergeo {

bool HypothesisReport::admissible() const { return failures().empty(); }

std::vector<std::string> HypothesisReport::failures() const {
  std::vector<std::string> out;
  if (!monic_f) out.push_back("monic_f");
  if (!monic_g) out.push_back("monic_g");
  if (!even_degree) out.push_back("even_degree");
  if (!unit_constant) out.push_back("unit_constant");
  if (!reciprocal_f) out.push_back("reciprocal_f");
  if (!reciprocal_g) out.push_back("reciprocal_g");
  if (!coprime) out.push_back("coprime");
  if (!primitive_pair) out.push_back("primitive_pair");
  return out;
}

HypothesisReport check_hypotheses(const IntPoly& f, const IntPoly& g) {
  HypothesisReport r;
  r.n = f.degree();
  r.monic_f = f.is_monic();
  r.monic_g = g.is_monic();
  r.even_degree = f.degree() == g.degree() && f.degree() > 0 && f.degree() % 2 == 0;
  r.unit_constant = f.coeff(0) == 1 && g.coeff(0) == 1;
  r.reciprocal_f = !f.is_zero() && is_self_reciprocal(f);
  r.reciprocal_g = !g.is_zero() && is_self_reciprocal(g);
  r.coprime = !(f.is_zero() && g.is_zero()) && poly_gcd(f, g).degree() == 0;
  r.primitive_pair = !f.is_zero() && !g.is_zero() && imprimitivity_set(f, g).empty();
  return r;
}

void require_admissible(const HypothesisReport& report) {
  auto fails = report.failures();
  if (fails.empty()) return;
  std::string msg = "failed:";
  for (const auto& f : fails) msg += " " + f;
  throw Error(ErrorCode::HypothesisViolation, msg);
}

}  // namespace hypergeo
