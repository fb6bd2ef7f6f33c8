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

#include "skipless/mds.hpp"
#include "skipless/zigzag.hpp"

namespace skipless {
namespace {

void BM_VerifyMds(benchmark::State& state) {
  const GaloisField f;
  const auto m = static_cast<unsigned>(state.range(0));
  const auto jobs = static_cast<unsigned>(state.range(1));
  const ZigzagCode code = random_coefficients(build_construction_a(m), 1, f);
  for (auto _ : state) benchmark::DoNotOptimize(verify_mds(code, f, jobs).mds);
}
BENCHMARK(BM_VerifyMds)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_ZigzagRepair(benchmark::State& state) {
  const GaloisField f;
  const ZigzagCode code = random_coefficients(build_construction_b(5), 1, f);
  Message msg(code.k, std::vector<FieldElement>(code.rows(), FieldElement(7)));
  const ArrayCodeword cw = encode(code, msg, f);
  const RepairPlan plan = plan_repair(code, 2);
  for (auto _ : state) benchmark::DoNotOptimize(execute_repair(cw, plan, code, f));
}
BENCHMARK(BM_ZigzagRepair);

}  // namespace
}  // namespace skipless
