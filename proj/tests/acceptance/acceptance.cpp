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

// Acceptance suite. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "nfctk/channel.hpp"
#include "nfctk/collector_server.hpp"
#include "nfctk/error.hpp"
#include "nfctk/scenario.hpp"
#include "nfctk/threat.hpp"
#include "support/generators.hpp"

using namespace nfctk;
using namespace nfctk::dispatch;
namespace t = nfctk::testing;

namespace {

// Collects the first few failure reasons of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(failures_) + " failure(s)";
    for (const auto& n : notes_) s += "; " + n;
    return s;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct LiveCollector {
  collector::RecordStore store;
  collector::CollectorService service{store};
  collector::CollectorServer server{service, "127.0.0.1", 0};
  LiveCollector() { server.start(); }
  ~LiveCollector() { server.stop(); }
};

struct InProcessCollector {
  collector::RecordStore store;
  collector::CollectorService service{store};
  http::LoopbackClient client{service, "127.0.0.1:8882"};
};

Scenario with_collector(Scenario s, const std::string& address) {
  s.collector_address = address;
  s.tag = make_beacon_tag(address, s.tag_location, 1);
  return s;
}

// 1 --------------------------------------------------------------------------
void codec_round_trip(Check& c) {
  std::mt19937_64 rng(0xC0DEC);
  for (int i = 0; i < 10000; ++i) {
    const auto m = t::random_message(rng, 4, i % 10 == 0 ? 700 : 120);
    try {
      c.expect(ndef::parse_message(ndef::serialize_message(m)) == m, "round trip mismatch at #" + std::to_string(i));
    } catch (const std::exception& e) {
      c.expect(false, std::string("round trip threw: ") + e.what());
    }
  }

  // Half pure noise, half single-byte damage to valid messages (reaches deeper).
  std::uniform_int_distribution<std::size_t> len(0, 4096);
  std::uniform_int_distribution<int> byte(0, 255);
  std::size_t rejected = 0;
  for (int i = 0; i < 100000; ++i) {
    Bytes input;
    if (i % 2 == 0) {
      input = t::random_bytes(rng, len(rng));
    } else {
      input = ndef::serialize_message(t::random_message(rng, 3, 200));
      input[std::uniform_int_distribution<std::size_t>(0, input.size() - 1)(rng)] = static_cast<std::uint8_t>(byte(rng));
      if (input.size() > 4096) input.resize(4096);
    }
    try {
      ndef::parse_message(input);
    } catch (const Error&) {
      ++rejected;
    } catch (const std::exception& e) {
      c.expect(false, std::string("parser escaped with non-codec exception: ") + e.what());
    }
  }
  c.expect(rejected > 0, "fuzzer never hit an error path");
}

// 2 --------------------------------------------------------------------------
void corpus_detection(Check& c) {
  using threat::Severity;
  using threat::ThreatClass;
  const auto cfg = threat::default_config();
  auto expect_finding = [&](const std::string& label, const threat::ThreatReport& r, ThreatClass cls, Severity sev) {
    const bool found = std::any_of(r.findings.begin(), r.findings.end(), [&](const threat::Finding& f) {
      return f.threat_class == cls && f.severity == sev;
    });
    c.expect(found, label + ": expected " + std::string(threat::class_name(cls)) + "/" +
                        std::string(threat::severity_name(sev)));
  };
  auto tag = [](std::string_view u) { return ndef::NdefMessage{ndef::build_uri_record(u)}; };

  expect_finding("og.likes", threat::analyze_message(tag(t::kFacebookLikeUrl), cfg), ThreatClass::CsrfAction,
                 Severity::High);
  expect_finding("intent/follow", threat::analyze_message(tag(t::kTwitterFollowUrl), cfg), ThreatClass::CsrfAction,
                 Severity::High);
  expect_finding("bank transfer", threat::analyze_message(tag(t::kBankUrl), cfg), ThreatClass::CsrfAction,
                 Severity::Critical);
  expect_finding("vCard",
                 threat::analyze_message(
                     ndef::NdefMessage{ndef::NdefRecord::make(ndef::Tnf::Mime, "text/vcard", t::kMaliciousVcard)}, cfg),
                 ThreatClass::ContactInjection, Severity::Medium);
  expect_finding("location url", threat::analyze_message(tag(t::kLocationUrl), cfg), ThreatClass::GeoLeak,
                 Severity::High);
  const auto page = threat::detect_fingerprint_script(t::kFingerprintPage, cfg);
  c.expect(page && page->threat_class == ThreatClass::FingerprintRisk && page->severity == Severity::Medium,
           "fingerprint page: expected FingerprintRisk/Medium");

  std::size_t benign = 0;
  auto expect_quiet = [&](const std::string& label, const ndef::NdefMessage& m) {
    ++benign;
    for (const auto& f : threat::analyze_message(m, cfg).findings) {
      c.expect(f.severity <= Severity::Info, "benign '" + label + "' flagged " + std::string(threat::class_name(f.threat_class)));
    }
  };
  for (const auto& u : t::benign_urls()) expect_quiet(u, tag(u));
  for (const auto& [lang, text] : t::benign_texts()) expect_quiet(text, ndef::NdefMessage{ndef::build_text_record(lang, text)});
  expect_quiet("empty record", ndef::NdefMessage{ndef::NdefRecord::empty()});
  c.expect(benign >= 20, "benign corpus too small");
}

// 3 --------------------------------------------------------------------------
void coffee_shop(Check& c) {
  LiveCollector live;
  http::NetworkClient net(live.server.address());
  const auto s = with_collector(find_plan("coffee-shop")->legs.at(0), live.server.address());
  const auto r = run_scenario(s, net);

  const auto snap = live.store.snapshot();
  c.expect(!r.collector_unreachable, "collector unreachable");
  c.expect(snap.locations.size() == 1, "expected 1 location, got " + std::to_string(snap.locations.size()));
  c.expect(snap.fingerprints.size() == 1, "expected 1 fingerprint, got " + std::to_string(snap.fingerprints.size()));
  if (snap.locations.size() == 1) {
    c.expect(snap.locations[0].lat == s.tag_location.lat && snap.locations[0].lon == s.tag_location.lon,
             "location differs from tag placement");
  }
  if (snap.fingerprints.size() == 1) {
    c.expect(snap.fingerprints[0].hash == t::reference_fnv1a64(t::kOnePlus3tCanonical),
             "hash differs from the reference FNV-1a");
    c.expect(snap.fingerprints[0].hash == t::kOnePlus3tHash, "hash differs from the frozen value");
  }
}

// 4 --------------------------------------------------------------------------
void mitigation(Check& c) {
  const auto base = find_plan("coffee-shop")->legs.at(0);
  SideEffectTrace auto_trace;
  {
    InProcessCollector rig;
    auto_trace = run_scenario(base, rig.client).trace;
    c.expect(!auto_trace.empty(), "AutoOpen produced no trace");
  }
  for (const PolicyMode& p : {PolicyMode{Prompt{false}}, PolicyMode{Notify{false}}}) {
    InProcessCollector rig;
    auto s = base;
    s.policy = p;
    run_scenario(s, rig.client);
    c.expect(rig.store.snapshot().size() == 0, policy_name(p) + " left records in the collector");
  }
  for (const PolicyMode& p : {PolicyMode{Prompt{true}}, PolicyMode{Notify{true}}}) {
    InProcessCollector rig;
    auto s = base;
    s.policy = p;
    c.expect(run_scenario(s, rig.client).trace == auto_trace, policy_name(p) + " trace differs from AutoOpen");
  }
}

// 5 --------------------------------------------------------------------------
void device_gating(Check& c) {
  std::mt19937_64 rng(0x6A7E);
  InProcessCollector rig;
  const auto& presets = device_presets();
  for (int i = 0; i < 1000; ++i) {
    const auto msg = i % 2 ? t::random_web_message(rng) : t::random_message(rng, 3, 100);
    auto device = presets[static_cast<std::size_t>(i) % presets.size()].profile;
    device.unlocked = i % 3 != 0;
    device.nfc_enabled = !device.unlocked ? (i % 5 != 0) : false;
    Scenario s{"gated", tags::create_tag(tags::kMaxCapacity, msg, static_cast<std::uint64_t>(i)), {}, device,
               AutoOpen{}, i % 4 == 0 ? ChannelAttacker{Eavesdrop{}} : ChannelAttacker{NoAttacker{}}};
    const auto r = run_scenario(s, rig.client);
    c.expect(r.trace.empty(), "gated device produced a trace at #" + std::to_string(i));
    c.expect(is_no_action(r.action), "gated device dispatched at #" + std::to_string(i));
  }
  c.expect(rig.store.snapshot().size() == 0, "collector saw traffic from gated devices");
}

// 6 --------------------------------------------------------------------------
void trth(Check& c) {
  std::mt19937_64 rng(0x7247);
  std::size_t mutations = 0;
  for (int i = 0; i < 1000; ++i) {
    ndef::NdefMessage msg = t::random_message(rng, 2, 24);
    while (ndef::serialized_size(msg) > 64) msg = t::random_message(rng, 2, 24);
    const auto seed = static_cast<std::uint64_t>(i) * 2 + 1;
    const auto tag = tags::create_tag(64, msg, seed);
    const auto baseline = tags::register_baseline(tag);

    c.expect(tags::verify_tag(tag, baseline), "untouched tag failed verification at #" + std::to_string(i));

    const auto bytes = tag.bytes();
    for (std::size_t k = 0; k < bytes.size(); ++k) {
      auto mutated = bytes;
      for (int delta = 1; delta < 256; ++delta) {
        mutated[k] = static_cast<std::uint8_t>(bytes[k] ^ delta);
        ++mutations;
        if (tags::verify_content(tag.uid(), mutated, baseline)) {
          c.expect(false, "mutation passed at tag #" + std::to_string(i) + " byte " + std::to_string(k));
        }
      }
    }

    // Physical swap: attacker's own tag with the same or different content.
    for (const auto& attacker_msg : {msg, t::random_message(rng, 2, 24)}) {
      try {
        const auto swapped = tags::replace_tag(tag, attacker_msg, seed + 1);
        c.expect(!tags::verify_tag(swapped, baseline), "replace_tag output passed at #" + std::to_string(i));
      } catch (const Error& e) {
        c.expect(false, std::string("replace_tag threw: ") + e.what());
      }
    }
  }
  c.expect(mutations > 1000, "too few mutations exercised");
}

// 7 --------------------------------------------------------------------------
void channel_attacks(Check& c) {
  std::mt19937_64 rng(0xEA7);
  for (int i = 0; i < 1000; ++i) {
    const auto bytes = ndef::serialize_message(t::random_message(rng, 3, 200));
    const auto r = interpose_channel(bytes, Eavesdrop{});
    c.expect(r.observed && *r.observed == bytes, "eavesdrop copy differs at #" + std::to_string(i));
    c.expect(r.delivered == bytes, "eavesdrop altered delivery at #" + std::to_string(i));
  }

  const auto device = *find_preset("oneplus-3t");
  for (int i = 0; i < 100; ++i) {
    const auto msg = t::random_web_message(rng);
    const auto original = ndef::decode_uri_record(msg.first());
    const auto bytes = ndef::serialize_message(msg);
    for (std::size_t k = 0; k < bytes.size(); ++k) {
      const auto action = discover_tag(interpose_channel(bytes, Corrupt{k}).delivered, device);
      c.expect(action != DispatchAction{OpenUrl{original}},
               "corrupt at byte " + std::to_string(k) + " still opened " + original);
    }
  }
}

// 8 --------------------------------------------------------------------------
void transit(Check& c) {
  LiveCollector live;
  http::NetworkClient net(live.server.address());
  auto plan = *find_plan("transit");
  for (auto& leg : plan.legs) leg = with_collector(leg, live.server.address());
  run_plan(plan, net);

  const auto snap = live.store.snapshot();
  c.expect(snap.locations.size() == 2, "expected 2 locations, got " + std::to_string(snap.locations.size()));
  if (snap.locations.size() == 2) {
    const auto& a = snap.locations[0];
    const auto& b = snap.locations[1];
    c.expect(a.lat != b.lat || a.lon != b.lon, "stations share coordinates");
    c.expect(a.lat == plan.legs[0].tag_location.lat && b.lat == plan.legs[1].tag_location.lat,
             "locations do not match the station tags");
    c.expect(!a.cookie_id.empty() && a.cookie_id == b.cookie_id, "visits are not linked by the cookie");
  }
  std::set<std::uint64_t> hashes;
  for (const auto& f : snap.fingerprints) hashes.insert(f.hash);
  c.expect(hashes.size() == 1, "expected 1 distinct fingerprint, got " + std::to_string(hashes.size()));
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const Criterion criteria[] = {
      {"1 codec round-trip and fuzz", codec_round_trip},
      {"2 attack corpus detection and benign specificity", corpus_detection},
      {"3 coffee-shop end to end", coffee_shop},
      {"4 mitigation policies", mitigation},
      {"5 device gating", device_gating},
      {"6 tag replacement detection", trth},
      {"7 channel attacks", channel_attacks},
      {"8 transit tracking", transit},
  };

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("uncaught: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (c.ok()) {
      std::printf("PASS  %-50s (%lld ms)\n", cr.name, static_cast<long long>(ms));
    } else {
      ++failed;
      std::printf("FAIL  %-50s (%lld ms): %s\n", cr.name, static_cast<long long>(ms), c.summary().c_str());
    }
    std::fflush(stdout);
  }
  const auto total = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %lld ms\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria),
              static_cast<long long>(total));
  return failed;
}
