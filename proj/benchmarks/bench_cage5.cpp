// Copyright 2026 The cage5 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "cage5/amalgam.hpp"
#include "cage5/catalog.hpp"
#include "cage5/route.hpp"
#include "cage5/search.hpp"
#include "cage5/semiplane.hpp"

using namespace cage5;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const FieldSpec f = make_field_of_order(static_cast<std::uint32_t>(state.range(0)));
  FieldElem acc = f.one();
  for (auto _ : state) {
    for (std::uint32_t b = 1; b < f.q(); ++b) acc = f.mul(acc, f.elem(b));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(49)->Arg(64)->Arg(125);

void BM_BuildCq(benchmark::State& state) {
  const FieldSpec f = make_field_of_order(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_Cq(f));
}
BENCHMARK(BM_BuildCq)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_GirthLevi(benchmark::State& state) {
  const auto l = build_Lq(make_field_of_order(static_cast<std::uint32_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(girth(l.graph));
}
BENCHMARK(BM_GirthLevi)->Arg(29)->Arg(49)->Unit(benchmark::kMillisecond);

void BM_AmalgamL(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto base = build_Lq(make_field_of_order(q));
  const auto pair = construction2_pair(q);
  for (auto _ : state) benchmark::DoNotOptimize(amalgamate_L(base, pair.g0, pair.g1));
}
BENCHMARK(BM_AmalgamL)->Arg(29)->Arg(47)->Unit(benchmark::kMillisecond);

void BM_RouteC64(benchmark::State& state) {
  const auto route = RouteDescriptor::parse("C q=64 pair=thm12 d=0");
  for (auto _ : state) benchmark::DoNotOptimize(build_route(route));
}
BENCHMARK(BM_RouteC64)->Unit(benchmark::kMillisecond);

void BM_SearchQuadruple(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_quadruple(q));
}
BENCHMARK(BM_SearchQuadruple)->Arg(16)->Arg(17)->Arg(19)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
