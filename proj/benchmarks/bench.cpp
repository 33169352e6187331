// Copyright 2026 The mubc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "mubc/atlas.hpp"
#include "mubc/bundle.hpp"
#include "mubc/field.hpp"
#include "mubc/mub.hpp"

namespace {

using namespace mubc;

void BM_FieldMul(benchmark::State& state) {
  const GaloisField f = GaloisField::make(static_cast<int>(state.range(0)));
  const auto elems = f.elements();
  for (auto _ : state) {
    Element acc = f.one();
    for (Element a : elems) {
      for (Element b : elems) acc = f.add(acc, f.mul(a, b));
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elems.size() * elems.size()));
}
BENCHMARK(BM_FieldMul)->DenseRange(2, 5);

void BM_EnumerateCurves(benchmark::State& state) {
  const GaloisField f = GaloisField::make(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves(f));
}
BENCHMARK(BM_EnumerateCurves)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SearchAllBundles(benchmark::State& state) {
  const GaloisField f = GaloisField::make(static_cast<int>(state.range(0)));
  const auto atlas = enumerate_curves(f);
  for (auto _ : state) benchmark::DoNotOptimize(search_bundles(f, atlas, {}, 0));
}
BENCHMARK(BM_SearchAllBundles)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyRayBundle(benchmark::State& state) {
  const GaloisField f = GaloisField::make(static_cast<int>(state.range(0)));
  const Bundle b = ray_bundle(f);
  for (auto _ : state) benchmark::DoNotOptimize(verify_bundle(f, b));
}
BENCHMARK(BM_VerifyRayBundle)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
