// Copyright 2026 The fqspectra Authors.
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

#include "fqspectra/energy.h"
#include "fqspectra/experiments.h"
#include "fqspectra/field.h"
#include "fqspectra/geometry.h"
#include "fqspectra/rng.h"
#include "fqspectra/spectra.h"

namespace fqs {
namespace {

// args: p, n
void BM_FieldMul(benchmark::State& state) {
  const auto f = FieldContext::make(static_cast<int>(state.range(0)),
                                    static_cast<int>(state.range(1)));
  Rng rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = 1 + static_cast<Elem>(rng.uniform(f.q() - 1));
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x : xs) acc = f.mul(acc, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Args({10007, 1})->Args({3, 4})->Args({31, 4});

// args: p, d, method (0 direct, 1 transform)
void BM_CayleySpectrum(benchmark::State& state) {
  const auto f = FieldContext::make(static_cast<int>(state.range(0)), 1);
  const AffineSpace space(f, static_cast<int>(state.range(1)));
  const Variety v = builtin_variety(space, VarietyFamily::parse("sphere", 1));
  const SpectrumOptions options{
      .method = state.range(2) == 0 ? SpectrumMethod::kDirect : SpectrumMethod::kTransform};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley_spectrum(space, v.points, options).lambda);
  }
}
BENCHMARK(BM_CayleySpectrum)
    ->ArgsProduct({{7, 13}, {3}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

// args: p, d, k; a random subset of the sphere at twice the critical size
void BM_FoldCounts(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const int k = static_cast<int>(state.range(2));
  const auto f = FieldContext::make(p, 1);
  const AffineSpace space(f, d);
  const Variety v = builtin_variety(space, VarietyFamily::parse("sphere", 1));
  const auto size = std::min<std::uint64_t>(
      v.size(), static_cast<std::uint64_t>(2 * critical_size(f.q(), d, 3)));
  const auto e = sample_subset(v, size, 0, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fold_counts(space, e, k).total());
  }
}
BENCHMARK(BM_FoldCounts)
    ->ArgsProduct({{11, 31}, {3}, {2, 3}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fqs

BENCHMARK_MAIN();
