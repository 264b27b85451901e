// Copyright 2026 The pantscomplex Authors
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

#include <pants/homotopy.hpp>
#include <pants/relations.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_CanonicalCode(benchmark::State& state) {
  const auto types = pants::enumerate_types({0, static_cast<int>(state.range(0))});
  std::vector<pants::PantsGraph> graphs;
  for (const auto& code : types) graphs.push_back(pants::decode(code));
  for (auto _ : state) {
    for (const auto& g : graphs) benchmark::DoNotOptimize(pants::canonical_code(g));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(graphs.size()));
}
BENCHMARK(BM_CanonicalCode)->Arg(5)->Arg(6)->Arg(7);

void BM_EnumerateTypes(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pants::enumerate_types({0, static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(BM_EnumerateTypes)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_BuildMoveGraph(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pants::build_move_graph({0, static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(BM_BuildMoveGraph)->Arg(5)->Arg(6)->Arg(7);

void BM_ReduceFareyLoop(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<pants::EdgePath> loops;
  for (int i = 0; i < 64; ++i) loops.push_back(pants::random_farey_loop(rng, 10, 1000000));
  for (auto _ : state) {
    for (const auto& loop : loops) {
      benchmark::DoNotOptimize(pants::reduce_farey_loop(pants::SlopeModel::A, loop));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(loops.size()));
}
BENCHMARK(BM_ReduceFareyLoop);

void BM_FillBasis05(benchmark::State& state) {
  const auto host = pants::build_move_graph({0, 5});
  auto cells = pants::find_instances(host, pants::RelationTag::R3A);
  const auto pentagons = pants::find_instances(host, pants::RelationTag::R5A);
  cells.insert(cells.end(), pentagons.begin(), pentagons.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(pants::simply_connected_report(host, cells));
  }
}
BENCHMARK(BM_FillBasis05);

}  // namespace
BENCHMARK_MAIN();
