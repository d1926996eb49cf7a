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

#include "nfctk/fingerprint.hpp"
#include "nfctk/ndef.hpp"
#include "nfctk/tag_store.hpp"
#include "nfctk/vcard.hpp"

using namespace nfctk;

namespace {

ndef::NdefMessage sample(std::size_t payload) {
  return ndef::NdefMessage{
      ndef::build_uri_record("http://localhost:8888?lat=1&long=3"),
      ndef::NdefRecord::make(ndef::Tnf::Mime, to_bytes("application/octet-stream"), std::nullopt,
                             Bytes(payload, 0x5a)),
      ndef::build_vcard_record({"Malicious Contact", "+123", "maliciouscontact@example.com", "MC;Mr.;", {}}),
  };
}

void BM_Serialize(benchmark::State& st) {
  const auto msg = sample(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(ndef::serialize_message(msg));
  st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) *
                       static_cast<std::int64_t>(ndef::serialized_size(msg)));
}
BENCHMARK(BM_Serialize)->Arg(16)->Arg(255)->Arg(4096);

void BM_Parse(benchmark::State& st) {
  const auto bytes = ndef::serialize_message(sample(static_cast<std::size_t>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(ndef::parse_message(bytes));
  st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) * static_cast<std::int64_t>(bytes.size()));
}
BENCHMARK(BM_Parse)->Arg(16)->Arg(255)->Arg(4096);

void BM_Fnv1a(benchmark::State& st) {
  const auto fp = dispatch::fingerprint_device(*dispatch::find_preset("oneplus-3t"));
  const auto text = dispatch::canonical_string(fp.components);
  for (auto _ : st) benchmark::DoNotOptimize(dispatch::fnv1a64(text));
}
BENCHMARK(BM_Fnv1a);

void BM_VerifyTag(benchmark::State& st) {
  const auto tag = tags::create_tag(512, sample(16), 7);
  const auto baseline = tags::register_baseline(tag);
  for (auto _ : st) benchmark::DoNotOptimize(tags::verify_tag(tag, baseline));
}
BENCHMARK(BM_VerifyTag);

}  // namespace

BENCHMARK_MAIN();
