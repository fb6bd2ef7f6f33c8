// Copyright 2026 The Skipless Authors
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

#include "skipless/block_repair.hpp"
#include "skipless/sqs.hpp"

namespace skipless {
namespace {

void BM_VerifySqs(benchmark::State& state) {
  const Design d = build_sqs(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_sqs(d).ok);
}
BENCHMARK(BM_VerifySqs)->Arg(26)->Arg(52)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_BuildSqs(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_sqs(static_cast<std::uint32_t>(state.range(0))).blocks.size());
  }
}
BENCHMARK(BM_BuildSqs)->Arg(28)->Arg(100)->Unit(benchmark::kMillisecond);

// Plans every block of the design once per iteration.
void BM_PlanAllBlocks(benchmark::State& state) {
  const Design d = build_sqs(static_cast<std::uint32_t>(state.range(0)));
  const BlockRepairPlanner planner(d);
  for (auto _ : state) {
    for (std::uint32_t b = 0; b < d.blocks.size(); ++b) benchmark::DoNotOptimize(planner.plan(b));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.blocks.size()));
}
BENCHMARK(BM_PlanAllBlocks)->Arg(26)->Arg(28)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_PlanMinSkip(benchmark::State& state) {
  const Design d = sqs14();
  for (auto _ : state) {
    for (std::uint32_t b = 0; b < d.blocks.size(); ++b) {
      benchmark::DoNotOptimize(plan_block_repair_min_skip(d, b));
    }
  }
}
BENCHMARK(BM_PlanMinSkip)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace skipless
