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

#include <string>
#include <vector>

#include "hypergeo/poly.hpp"

namespace hypergeo {

struct HypothesisReport {
  bool monic_f = false;
  bool monic_g = false;
  bool even_degree = false;  // deg f = deg g = n, n even and positive
  bool unit_constant = false;
  bool reciprocal_f = false;
  bool reciprocal_g = false;
  bool coprime = false;
  bool primitive_pair = false;
  int n = 0;

  bool admissible() const;
  /// Names of the failing predicates, in field order.
  std::vector<std::string> failures() const;
};

HypothesisReport check_hypotheses(const IntPoly& f, const IntPoly& g);

/// Throws HypothesisViolation listing the failing predicates.
void require_admissible(const HypothesisReport& report);

}  // namespace hypergeo
