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

#include <benchmark/benchmark.h>

#include "hypergeo/catalog.hpp"
#include "hypergeo/criterion.hpp"
#include "hypergeo/monodromy.hpp"

using namespace hypergeo;

namespace {

const std::vector<std::pair<IntPoly, IntPoly>>& pairs(int degree) {
  static const auto d4 = enumerate_pairs(4);
  static const auto d6 = enumerate_pairs(6);
  return degree == 4 ? d4 : d6;
}

void BM_MonodromyPair(benchmark::State& state) {
  const auto& ps = pairs(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [f, g] = ps[i++ % ps.size()];
    benchmark::DoNotOptimize(monodromy_pair(f, g, FormNormalization::PrimitiveInteger));
  }
}
BENCHMARK(BM_MonodromyPair)->Arg(4)->Arg(6);

void BM_InvariantFormDegree16(benchmark::State& state) {
  IntPoly f = *parse_poly("X^17-1").exact_div(parse_poly("X-1"));
  IntPoly g = parse_poly("X^8-1").pow(2);
  RatMat a = companion(f), b = companion(g);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_form(a, b, FormNormalization::PrimitiveInteger));
}
BENCHMARK(BM_InvariantFormDegree16)->Unit(benchmark::kMillisecond);

void BM_ExtendedTripleSearch(benchmark::State& state) {
  MonodromyData md = monodromy_pair(parse_poly("Phi3*Phi4"), parse_poly("Phi6^2"));
  for (auto _ : state) benchmark::DoNotOptimize(extended_triple_search(md, Limits{}.depth));
}
BENCHMARK(BM_ExtendedTripleSearch)->Unit(benchmark::kMillisecond);

void BM_ClassifyCertified(benchmark::State& state) {
  IntPoly f = parse_poly("(X-1)^4"), g = parse_poly("Phi10");
  for (auto _ : state) benchmark::DoNotOptimize(classify(f, g, Limits{}));
}
BENCHMARK(BM_ClassifyCertified)->Unit(benchmark::kMillisecond);

void BM_ClassifyThm1(benchmark::State& state) {
  IntPoly f = parse_poly("(X-1)^4"), g = parse_poly("Phi6^2");
  for (auto _ : state) benchmark::DoNotOptimize(classify_thm1(f, g));
}
BENCHMARK(BM_ClassifyThm1);

void BM_Sl2Membership(benchmark::State& state) {
  Sl2Word w;
  for (int i = 0; i < state.range(0); ++i) w.letters.emplace_back(i % 2, i % 3 ? 1 : -2);
  const BigInt c(2);
  RatMat m = eval_sl2(w, c);
  for (auto _ : state) benchmark::DoNotOptimize(sl2_membership(m, c));
}
BENCHMARK(BM_Sl2Membership)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
