// Copyright 2026 The wt Authors
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


#include <cmath>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wt/branch_points.hpp"
#include "wt/chebyshev.hpp"
#include "wt/complex.hpp"
#include "wt/core.hpp"
#include "wt/series.hpp"

namespace {

std::vector<double> sample_points(int count, double lo, double hi) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> xs(count);
  for (auto& x : xs) x = d(rng);
  return xs;
}

void BM_EvalReal(benchmark::State& state) {
  const wt::BranchIndex n(static_cast<int>(state.range(0)));
  const auto xs = sample_points(1024, -1e3, 1e3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wt::eval_real(xs[i++ & 1023], n));
  }
}
BENCHMARK(BM_EvalReal)->Arg(1)->Arg(5);

void BM_EvalCheb(benchmark::State& state) {
  const auto model = wt::cheb::fit(3.5, 15);
  const auto xs = sample_points(1024, -1e3, 1e3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wt::cheb::eval_cheb(xs[i++ & 1023], model));
  }
}
BENCHMARK(BM_EvalCheb);

void BM_ChebFit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wt::cheb::fit(3.5, 15));
}
BENCHMARK(BM_ChebFit)->Unit(benchmark::kMillisecond);

void BM_EvalComplex(benchmark::State& state) {
  const auto atlas = wt::plane::SheetAtlas::finite_cuts();
  const wt::BranchIndex n(static_cast<int>(state.range(0)));
  const auto re = sample_points(256, -8.0, 8.0);
  const auto im = sample_points(256, 0.5, 8.0);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ & 255;
    benchmark::DoNotOptimize(wt::plane::eval_complex({re[k], im[(k * 7) & 255]}, n, atlas));
  }
}
BENCHMARK(BM_EvalComplex)->Arg(1)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_SeriesCoefficients(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wt::series::large_x_coeffs(order));
}
BENCHMARK(BM_SeriesCoefficients)->Arg(40)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_BranchPoints(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wt::branch::find_branch_points(50));
}
BENCHMARK(BM_BranchPoints)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
