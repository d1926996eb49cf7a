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
#include <thread>
#include <unistd.h>

#include "nfctk/collector.hpp"
#include "nfctk/error.hpp"
#include "support/oracles.hpp"

using namespace nfctk;
using namespace nfctk::collector;
using nlohmann::json;

namespace {

const std::string kBase = "http://127.0.0.1:8882";

std::string fingerprint_body(const dispatch::Components& comps, std::uint64_t hash) {
  json j;
  j["result"] = dispatch::hash_hex(hash);
  j["components"] = json::array();
  for (const auto& [k, v] : comps) j["components"].push_back({{"key", k}, {"value", v}});
  return j.dump();
}

std::filesystem::path temp_file(const char* tag) {
  return std::filesystem::temp_directory_path() /
         ("nfctk_" + std::string(tag) + "_" + std::to_string(::getpid()) + ".ndjson");
}

}  // namespace

TEST_CASE("cookie ids and cookie header parsing") {
  CHECK(make_cookie_id(1) == "c000001");
  CHECK(make_cookie_id(1234567) == "c1234567");
  CHECK(cookie_value("TestCookie=c000004", "TestCookie") == "c000004");
  CHECK(cookie_value("a=1; TestCookie=c000009; b=2", "TestCookie") == "c000009");
  CHECK(cookie_value("a=1; b=2", "TestCookie") == std::nullopt);
  CHECK(cookie_value("", "TestCookie") == std::nullopt);
}

TEST_CASE("track records the location and issues a cookie") {
  RecordStore store;
  CollectorService svc(store);
  auto res = svc.handle({"GET", kBase + "/track?lat=22.2819&long=114.1577", {}, ""});
  CHECK(res.status == 200);
  CHECK(http::find_header(res.headers, "Set-Cookie") == "TestCookie=c000001");
  CHECK(http::find_header(res.headers, "x-nfctk-page") == "fingerprint");
  CHECK(res.body.find("Fingerprint2().get") != std::string::npos);

  // Bare root with the query on it, as a location tag would send.
  res = svc.handle({"GET", "http://localhost:8888?lat=1&long=3", {{"Cookie", "TestCookie=c000001"}}, ""});
  CHECK(res.status == 200);
  CHECK(http::find_header(res.headers, "Set-Cookie") == "TestCookie=c000001");

  const auto snap = store.snapshot();
  REQUIRE(snap.locations.size() == 2);
  CHECK(snap.locations[0].lat == 22.2819);
  CHECK(snap.locations[0].lon == 114.1577);
  CHECK(snap.locations[0].received_at == 1);
  CHECK(snap.locations[1].lat == 1.0);
  CHECK(snap.locations[1].cookie_id == "c000001");
  CHECK_FALSE(snap.locations[1].partial);
}

TEST_CASE("partial and out-of-range beacons are kept and flagged") {
  RecordStore store;
  CollectorService svc(store);
  svc.handle({"GET", kBase + "/track?lat=abc&long=3", {}, ""});
  svc.handle({"GET", kBase + "/track", {}, ""});
  svc.handle({"GET", kBase + "/track?lat=95&long=3", {}, ""});
  svc.handle({"GET", kBase + "/track?lat=1&lat=2&long=3", {}, ""});
  const auto locs = store.snapshot().locations;
  REQUIRE(locs.size() == 4);
  CHECK(locs[0].partial);
  CHECK_FALSE(locs[0].lat.has_value());
  CHECK(locs[0].lon == 3.0);
  CHECK(locs[1].partial);
  CHECK_FALSE(locs[2].partial);
  CHECK(locs[2].out_of_range);
  CHECK(locs[3].lat == 1.0);  // first value wins
}

TEST_CASE("collectFingerprint validation") {
  RecordStore store;
  CollectorService svc(store);
  const auto fp = dispatch::fingerprint_device(*dispatch::find_preset("oneplus-3t"));
  const auto url = kBase + "/collectFingerprint";

  CHECK(svc.handle({"POST", url, {}, fingerprint_body(fp.components, fp.hash)}).status == 204);
  CHECK(svc.handle({"POST", url, {}, fingerprint_body(fp.components, fp.hash ^ 1)}).status == 400);
  CHECK(svc.handle({"POST", url, {}, "{"}).status == 400);
  CHECK(svc.handle({"POST", url, {}, R"({"result":"237ce135cfd7ca58"})"}).status == 400);
  CHECK(svc.handle({"POST", url, {}, R"({"result":"xyz","components":[]})"}).status == 400);
  CHECK(svc.handle({"POST", url, {}, R"({"result":17,"components":[]})"}).status == 400);
  CHECK(svc.handle({"GET", url, {}, ""}).status == 405);

  const auto snap = store.snapshot();
  REQUIRE(snap.fingerprints.size() == 1);
  CHECK(snap.fingerprints[0].hash == testing::kOnePlus3tHash);
  CHECK(snap.fingerprints[0].components == fp.components);
}

TEST_CASE("routing") {
  RecordStore store;
  CollectorService svc(store);
  CHECK(svc.handle({"GET", kBase + "/nope", {}, ""}).status == 404);
  CHECK(svc.handle({"POST", kBase + "/track", {}, ""}).status == 405);
  CHECK(svc.handle({"DELETE", kBase + "/records", {}, ""}).status == 405);
  CHECK(svc.handle({"GET", "::::", {}, ""}).status == 400);
  const auto res = svc.handle({"GET", kBase + "/records", {}, ""});
  CHECK(res.status == 200);
  CHECK(snapshot_from_json(res.body).size() == 0);
}

TEST_CASE("sequence numbers are shared and strictly increasing") {
  RecordStore store;
  const auto a = store.append_location(1, 2, std::nullopt);
  const auto b = store.append_fingerprint(5, {});
  const auto c = store.append_location(3, 4, std::string("c000001"));
  CHECK(a.received_at == 1);
  CHECK(b.received_at == 2);
  CHECK(c.received_at == 3);
  CHECK(c.cookie_id == "c000001");

  const auto before = store.snapshot();
  store.append_fingerprint(6, {});
  const auto delta = store.snapshot().since(before);
  CHECK(delta.size() == 1);
  CHECK(delta.fingerprints.at(0).hash == 6);
  CHECK(store.snapshot().last_sequence() == 4);
}

TEST_CASE("snapshot json round trip") {
  RecordStore store;
  store.append_location(22.2819, 114.1577, std::nullopt);
  store.append_location(std::nullopt, 3, std::nullopt);
  const auto fp = dispatch::fingerprint_device(*dispatch::find_preset("samsung-c7"));
  store.append_fingerprint(fp.hash, fp.components);
  const auto snap = store.snapshot();
  CHECK(snapshot_from_json(snapshot_to_json(snap)).fingerprints == snap.fingerprints);
  CHECK(snapshot_from_json(snapshot_to_json(snap, 2)).locations == snap.locations);
  CHECK_THROWS_AS(snapshot_from_json("[]"), Error);
  CHECK_THROWS_AS(snapshot_from_json(R"({"fingerprints":[{"hash":"zz","components":[],"seq":1}],"locations":[]})"),
                  Error);
}

TEST_CASE("persistence survives a restart") {
  const auto path = temp_file("persist");
  std::filesystem::remove(path);
  {
    RecordStore store(path, true);
    store.append_location(1.5, 2.5, std::nullopt);
    store.append_fingerprint(testing::kOnePlus3tHash, {{"os", "x"}});
  }
  {
    RecordStore store(path);
    const auto snap = store.snapshot();
    REQUIRE(snap.size() == 2);
    CHECK(snap.locations[0].lat == 1.5);
    CHECK(snap.fingerprints[0].hash == testing::kOnePlus3tHash);
    CHECK(store.append_location(0, 0, std::nullopt).received_at == 3);
  }
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == 3);

  {
    std::ofstream bad(path, std::ios::app);
    bad << "{\"kind\":\"mystery\",\"seq\":9}\n";
  }
  CHECK_THROWS_AS(RecordStore{path}, Error);
  std::filesystem::remove(path);
}

TEST_CASE("unwritable store answers 500") {
  RecordStore store(std::filesystem::path("/nonexistent-dir-nfctk/records.ndjson"));
  CollectorService svc(store);
  CHECK(svc.handle({"GET", kBase + "/track?lat=1&long=2", {}, ""}).status == 500);
  CHECK(store.snapshot().size() == 0);
  try {
    store.append_fingerprint(1, {});
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.is_io());
  }
}

TEST_CASE("concurrent appends lose nothing") {
  RecordStore store;
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&store] {
      for (int i = 0; i < 250; ++i) store.append_location(i, i, std::nullopt);
    });
  }
  for (auto& t : threads) t.join();
  const auto snap = store.snapshot();
  REQUIRE(snap.locations.size() == 2000);
  for (std::size_t i = 0; i < snap.locations.size(); ++i) CHECK(snap.locations[i].received_at == i + 1);
}
