// Copyright 2026 The Authors.
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

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "cgeo/chains.hpp"
#include "cgeo/closure_system.hpp"
#include "cgeo/decomp.hpp"
#include "cgeo/geometry.hpp"
#include "cgeo/ground_set.hpp"
#include "cgeo/set_family.hpp"
#include "cgeo/subset.hpp"

namespace {

cgeo::ConvexGeometry interval_geometry(int n) {
  cgeo::GroundSet ground = cgeo::GroundSet::numbered(n);
  std::vector<std::uint64_t> masks{0};
  for (int i = 0; i < n; ++i) {
    std::uint64_t m = 0;
    for (int j = i; j < n; ++j) {
      m |= std::uint64_t{1} << j;
      masks.push_back(m);
    }
  }
  return cgeo::require_geometry(cgeo::ClosureSystem::from_family(
      cgeo::SetFamily(ground, std::move(masks))));
}

void BM_closure_query(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cgeo::ConvexGeometry g = cgeo::random_geometry(n, 4, 11);
  const std::uint64_t full = g.ground().full_mask();
  std::uint64_t m = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.system().closure_mask(m));
    m = (m + 0x9e3779b9) & full;
  }
}
BENCHMARK(BM_closure_query)->Arg(6)->Arg(8);

void BM_join_systems(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cgeo::ConvexGeometry a = cgeo::random_geometry(n, 2, 3);
  cgeo::ConvexGeometry b = cgeo::random_geometry(n, 3, 4);
  std::vector<cgeo::ClosureSystem> inputs{a.system(), b.system()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::join_systems(inputs));
  }
}
BENCHMARK(BM_join_systems)->Arg(5)->Arg(6);

void BM_recognize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cgeo::ConvexGeometry g = cgeo::random_geometry(n, 4, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::recognize(g.system()));
  }
}
BENCHMARK(BM_recognize)->Arg(5)->Arg(6);

void BM_maximal_chains(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cgeo::ConvexGeometry g = interval_geometry(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::maximal_chains(g.system()));
  }
}
BENCHMARK(BM_maximal_chains)->Arg(6)->Arg(8);

void BM_compatible_orders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cgeo::ConvexGeometry g = interval_geometry(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cgeo::compatible_orders(g));
  }
}
BENCHMARK(BM_compatible_orders)->Arg(6)->Arg(8);

void BM_greedy_cover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cgeo::ConvexGeometry g = interval_geometry(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        cgeo::min_order_cover(g, cgeo::CoverMode::Greedy));
  }
}
BENCHMARK(BM_greedy_cover)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
