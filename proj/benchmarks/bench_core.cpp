// Copyright 2026 The zdlab Authors
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

#include "zdlab/dsl.hpp"
#include "zdlab/ext.hpp"
#include "zdlab/harness.hpp"
#include "zdlab/predicates.hpp"

using namespace zdlab;

namespace {

const char* kRings[] = {"Z12", "Prod(Z4,Z4)", "PolyQuot(Z4,x^2)", "Prod(Z2,PolyQuot(Z2,x^3))"};

}  // namespace

// Rings are rebuilt each iteration so the lattice is not memoized.
static void BM_IdealLattice(benchmark::State& state) {
  const char* text = kRings[state.range(0)];
  for (auto _ : state) {
    RingPtr r = dsl::ring_from_text(text);
    benchmark::DoNotOptimize(r->ideal_lattice().size());
  }
  state.SetLabel(text);
}
BENCHMARK(BM_IdealLattice)->DenseRange(0, 3);

static void BM_ModulePredicates(benchmark::State& state) {
  RingPtr r = dsl::ring_from_text("Prod(Z2,Z4)");
  for (auto _ : state) {
    ModulePtr m = dsl::module_from_text("Sum(Cyclic((0,1)),Reg)", r);
    benchmark::DoNotOptimize(is_auslander(m).holds);
    benchmark::DoNotOptimize(is_torsion_free(m).holds);
  }
}
BENCHMARK(BM_ModulePredicates);

static void BM_BruteForceZd(benchmark::State& state) {
  RingPtr r = dsl::ring_from_text("Z6");
  ModulePtr m = dsl::module_from_text("Cyclic(3)", r);
  const ExtElement f = parse_ext("2*X^2+4*X+2", r);
  const unsigned degree = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_zd(f, m, degree).holds);
}
BENCHMARK(BM_BruteForceZd)->DenseRange(1, 3);

static void BM_CriterionZd(benchmark::State& state) {
  RingPtr r = dsl::ring_from_text("Z6");
  ModulePtr m = dsl::module_from_text("Cyclic(3)", r);
  const ExtElement f = parse_ext("2*X^2+4*X+2", r);
  for (auto _ : state) benchmark::DoNotOptimize(is_zd_on_extension(f, m).holds);
}
BENCHMARK(BM_CriterionZd);

static void BM_McCoyWitness(benchmark::State& state) {
  RingPtr r = dsl::ring_from_text("Z8");
  const ExtElement f = parse_ext("4*X^2+4", r);
  const ExtElement g = parse_ext("2*X+6", dsl::module_from_text("Reg", r));
  for (auto _ : state) benchmark::DoNotOptimize(mccoy_witness(f, g).k);
}
BENCHMARK(BM_McCoyWitness);

static void BM_Universe(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harness::generate_universe().modules.size());
}
BENCHMARK(BM_Universe)->Unit(benchmark::kMillisecond);

static void BM_FullSuite(benchmark::State& state) {
  const harness::Universe u = harness::generate_universe();
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_suite("all", u).size());
}
BENCHMARK(BM_FullSuite)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
