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

#include "nfctk/collector.hpp"
#include "nfctk/threat.hpp"

using namespace nfctk;

namespace {

void BM_AnalyzeMessage(benchmark::State& st) {
  const auto cfg = threat::default_config();
  const ndef::NdefMessage msg{
      ndef::build_uri_record("http://banksite.com/MyAccount/transfer?account=\"transfer_to\"&amount=\"wanted_amount\""),
      ndef::build_uri_record("http://xn--bnksite-hwa.com/?lat=22.28&long=114.15"),
      ndef::build_uri_record("tel:+123"),
      ndef::build_text_record("en", "hello"),
  };
  for (auto _ : st) benchmark::DoNotOptimize(threat::analyze_message(msg, cfg));
}
BENCHMARK(BM_AnalyzeMessage);

void BM_FingerprintScript(benchmark::State& st) {
  const auto cfg = threat::default_config();
  const auto page = collector::fingerprint_page_html();
  for (auto _ : st) benchmark::DoNotOptimize(threat::detect_fingerprint_script(page, cfg));
}
BENCHMARK(BM_FingerprintScript);

}  // namespace

BENCHMARK_MAIN();
