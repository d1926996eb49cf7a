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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <unistd.h>

#include "nfctk/error.hpp"
#include "nfctk/scenario.hpp"
#include "support/oracles.hpp"

using namespace nfctk;
using namespace nfctk::dispatch;

namespace {

struct Rig {
  collector::RecordStore store;
  collector::CollectorService svc{store};
  http::LoopbackClient net{svc, "127.0.0.1:8882"};
};

Scenario coffee() { return find_plan("coffee-shop")->legs.at(0); }

}  // namespace

TEST_CASE("beacon url formatting round trips coordinates") {
  CHECK(location_beacon_url("127.0.0.1:8882", {22.2819, 114.1577}) ==
        "http://127.0.0.1:8882/track?lat=22.2819&long=114.1577");
  CHECK(format_coordinate(-0.5) == "-0.5");
  CHECK(format_coordinate(1) == "1");
  const auto tag = make_beacon_tag("127.0.0.1:8882", {1, 3}, 9);
  CHECK(tag.capacity_bytes() == 144);
  CHECK(ndef::decode_uri_record(tag.message().first()) == "http://127.0.0.1:8882/track?lat=1&long=3");
}

TEST_CASE("coffee-shop: one location at the tag, one fingerprint") {
  Rig rig;
  const auto s = coffee();
  const auto r = run_scenario(s, rig.net);
  CHECK(std::holds_alternative<OpenUrl>(r.action));
  CHECK_FALSE(r.collector_unreachable);
  REQUIRE(r.collector_delta.locations.size() == 1);
  CHECK(r.collector_delta.locations[0].lat == s.tag_location.lat);
  CHECK(r.collector_delta.locations[0].lon == s.tag_location.lon);
  REQUIRE(r.collector_delta.fingerprints.size() == 1);
  CHECK(r.collector_delta.fingerprints[0].hash == testing::kOnePlus3tHash);
  CHECK(r.collector_delta.fingerprints[0].hash ==
        testing::reference_fnv1a64(canonical_string(fingerprint_device(s.device).components)));
  CHECK_FALSE(r.attacker_observed.has_value());
}

TEST_CASE("policies gate the collector") {
  Rig rig;
  auto s = coffee();
  const auto baseline = run_scenario(s, rig.net).trace;
  for (const PolicyMode& p : {PolicyMode{Prompt{false}}, PolicyMode{Notify{false}}}) {
    s.policy = p;
    const auto r = run_scenario(s, rig.net);
    CHECK(r.trace.empty());
    CHECK(r.collector_delta.size() == 0);
  }
  for (const PolicyMode& p : {PolicyMode{Prompt{true}}, PolicyMode{Notify{true}}}) {
    Rig fresh;
    s.policy = p;
    CHECK(run_scenario(s, fresh.net).trace == baseline);
  }
}

TEST_CASE("gated devices read nothing") {
  Rig rig;
  auto s = coffee();
  s.attacker = Eavesdrop{};
  s.device.unlocked = false;
  auto r = run_scenario(s, rig.net);
  CHECK(r.action == DispatchAction{NoAction{NoActionReason::DeviceLocked}});
  CHECK(r.trace.empty());
  CHECK_FALSE(r.attacker_observed.has_value());
  s.device.unlocked = true;
  s.device.nfc_enabled = false;
  r = run_scenario(s, rig.net);
  CHECK(r.action == DispatchAction{NoAction{NoActionReason::NfcDisabled}});
  CHECK(rig.store.snapshot().size() == 0);
}

TEST_CASE("channel attackers in the pipeline") {
  Rig rig;
  auto s = coffee();
  s.attacker = Eavesdrop{};
  auto r = run_scenario(s, rig.net);
  REQUIRE(r.attacker_observed.has_value());
  CHECK(*r.attacker_observed == s.tag.bytes());

  s.attacker = Corrupt{0};
  r = run_scenario(s, rig.net);
  CHECK(r.action == DispatchAction{NoAction{NoActionReason::ParseError}});

  s.attacker = Corrupt{s.tag.bytes().size()};
  CHECK_THROWS_AS(run_scenario(s, rig.net), Error);

  s.attacker = Replace{ndef::NdefMessage{ndef::build_uri_record("tel:+123")}};
  r = run_scenario(s, rig.net);
  CHECK(r.trace == SideEffectTrace{DialerOpened{"+123"}});
}

TEST_CASE("transit plan links two stations through the cookie") {
  Rig rig;
  const auto plan = *find_plan("transit");
  const auto reports = run_plan(plan, rig.net);
  REQUIRE(reports.size() == 2);
  const auto snap = rig.store.snapshot();
  REQUIRE(snap.locations.size() == 2);
  CHECK(snap.locations[0].lat != snap.locations[1].lat);
  CHECK(snap.locations[0].cookie_id == snap.locations[1].cookie_id);
  REQUIRE(snap.fingerprints.size() == 2);
  CHECK(snap.fingerprints[0].hash == snap.fingerprints[1].hash);
  CHECK(snap.fingerprints[0].hash == testing::kSamsungC7Hash);
}

TEST_CASE("collector unreachable with no collector") {
  struct Dead final : http::Client {
    std::optional<http::Response> send(const http::Request&) override { return std::nullopt; }
  } net;
  const auto r = run_scenario(coffee(), net);
  CHECK(r.collector_unreachable);
  CHECK(r.collector_delta.size() == 0);
}

TEST_CASE("scenario files") {
  const auto dir = std::filesystem::temp_directory_path() / ("nfctk_scn_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto tag = make_beacon_tag("127.0.0.1:8882", {22.5, 114.5}, 3);
  tags::save_dump(tag, dir / "tag.hex", tags::DumpFormat::Hex);
  const auto evil = tags::create_tag(64, ndef::NdefMessage{ndef::build_uri_record("tel:+1")}, 4);
  tags::save_dump(evil, dir / "evil.bin", tags::DumpFormat::Binary);

  {
    std::ofstream f(dir / "s.json");
    f << R"({"name":"file","tag_dump":"tag.hex","tag_dump_hex":true,"tag_lat":22.5,"tag_long":114.5,
             "device_preset":"samsung-c7","policy":"prompt-allow","attacker":"corrupt:2"})";
  }
  const auto s = load_scenario_file(dir / "s.json");
  CHECK(s.name == "file");
  CHECK(s.tag.message() == tag.message());
  CHECK(s.tag_location == GeoPoint{22.5, 114.5});
  CHECK(s.device == *find_preset("samsung-c7"));
  CHECK(s.policy == PolicyMode{Prompt{true}});
  CHECK(s.attacker == ChannelAttacker{Corrupt{2}});
  CHECK(s.collector_address == "127.0.0.1:8882");

  const auto r = parse_scenario(R"({"tag_dump":"tag.hex","tag_dump_hex":true,"attacker":"replace:evil.bin",
                                   "unlocked":false})",
                                dir);
  CHECK(r.attacker == ChannelAttacker{Replace{evil.message()}});
  CHECK_FALSE(r.device.unlocked);

  for (const auto* bad : {R"({"tag_dump":"tag.hex","tag_dump_hex":true,"policy":"maybe"})",
                          R"({"tag_dump":"tag.hex","tag_dump_hex":true,"device_preset":"pager"})",
                          R"({"tag_dump":"tag.hex","tag_dump_hex":true,"attacker":"corrupt:x"})",
                          R"({"tag_dump":"tag.hex","tag_dump_hex":true,"attacker":"laser"})", R"({})", "not json"}) {
    try {
      parse_scenario(bad, dir);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadConfig);
    }
  }
  CHECK_THROWS_AS(load_scenario_file(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report json shape") {
  Rig rig;
  auto s = coffee();
  s.attacker = Eavesdrop{};
  const auto j = nlohmann::json::parse(report_to_json(run_scenario(s, rig.net)));
  CHECK(j["scenario"] == "coffee-shop");
  CHECK(j["action"]["kind"] == "OpenUrl");
  CHECK(j["trace"].size() == 4);
  CHECK(j["trace"][2]["hash"] == "237ce135cfd7ca58");
  CHECK(j["attacker_observed"] == to_hex(s.tag.bytes()));
  CHECK(j["collector_delta"]["locations"].size() == 1);
  CHECK(j["collector_unreachable"] == false);
  CHECK(nlohmann::json::parse(reports_to_json({})).empty());
}
