// Copyright 2026 The nfctk Authors
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

#include "nfctk/scenario.hpp"

using namespace nfctk;

namespace {

// Whole pipeline against a fresh in-process collector.
void BM_CoffeeShop(benchmark::State& st) {
  const auto s = dispatch::find_plan("coffee-shop")->legs.at(0);
  for (auto _ : st) {
    collector::RecordStore store;
    collector::CollectorService svc(store);
    http::LoopbackClient net(svc, "127.0.0.1:8882");
    benchmark::DoNotOptimize(dispatch::run_scenario(s, net));
  }
}
BENCHMARK(BM_CoffeeShop);

void BM_GatedRead(benchmark::State& st) {
  collector::RecordStore store;
  collector::CollectorService svc(store);
  http::LoopbackClient net(svc, "127.0.0.1:8882");
  auto s = dispatch::find_plan("coffee-shop")->legs.at(0);
  s.device.unlocked = false;
  for (auto _ : st) benchmark::DoNotOptimize(dispatch::run_scenario(s, net));
}
BENCHMARK(BM_GatedRead);

}  // namespace

BENCHMARK_MAIN();
