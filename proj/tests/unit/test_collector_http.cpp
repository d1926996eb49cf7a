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

#include <atomic>
#include <set>
#include <thread>

#include "nfctk/collector_server.hpp"
#include "nfctk/error.hpp"
#include "nfctk/scenario.hpp"
#include "support/oracles.hpp"

using namespace nfctk;
using namespace nfctk::collector;

TEST_CASE("collector over real HTTP") {
  RecordStore store;
  CollectorService svc(store);
  CollectorServer server(svc, "127.0.0.1", 0);
  server.start();
  REQUIRE(server.port() > 0);
  http::NetworkClient net(server.address());

  SUBCASE("beacon and fingerprint round trip") {
    const auto res = net.send({"GET", "http://" + server.address() + "/track?lat=1&long=3", {}, ""});
    REQUIRE(res.has_value());
    CHECK(res->status == 200);
    CHECK(http::find_header(res->headers, "Set-Cookie") == "TestCookie=c000001");
    CHECK(http::find_header(res->headers, kPageMarkerHeader) == "fingerprint");

    auto plan = *dispatch::find_plan("coffee-shop");
    auto leg = plan.legs.at(0);
    leg.collector_address = server.address();
    leg.tag = dispatch::make_beacon_tag(server.address(), leg.tag_location, 1);
    const auto r = dispatch::run_scenario(leg, net);
    CHECK_FALSE(r.collector_unreachable);
    REQUIRE(r.collector_delta.locations.size() == 1);
    CHECK(r.collector_delta.locations[0].lat == leg.tag_location.lat);
    REQUIRE(r.collector_delta.fingerprints.size() == 1);
    CHECK(r.collector_delta.fingerprints[0].hash == testing::kOnePlus3tHash);
  }

  SUBCASE("offline web for other hosts") {
    const auto res = net.send({"GET", "https://graph.facebook.com/123/og.likes", {}, ""});
    REQUIRE(res.has_value());
    CHECK(res->status == 200);
    CHECK(res->body.empty());
    CHECK(store.snapshot().size() == 0);
  }

  SUBCASE("32 concurrent posts yield 32 records") {
    const auto fp = dispatch::fingerprint_device(*dispatch::find_preset("xiaomi-mi3w-miui8"));
    std::string body = R"({"result":")" + dispatch::hash_hex(fp.hash) + R"(","components":[)";
    for (std::size_t i = 0; i < fp.components.size(); ++i) {
      if (i) body += ",";
      body += R"({"key":")" + fp.components[i].first + R"(","value":")" + fp.components[i].second + "\"}";
    }
    body += "]}";
    std::atomic<int> ok{0};
    std::vector<std::thread> threads;
    for (int i = 0; i < 32; ++i) {
      threads.emplace_back([&] {
        http::NetworkClient c(server.address());
        const auto res = c.send({"POST", "http://" + server.address() + "/collectFingerprint",
                                 {{"Content-Type", "application/json"}}, body});
        if (res && res->status == 204) ++ok;
      });
    }
    for (auto& t : threads) t.join();
    CHECK(ok == 32);
    const auto snap = store.snapshot();
    CHECK(snap.fingerprints.size() == 32);
    std::set<std::uint64_t> seqs;
    for (const auto& f : snap.fingerprints) seqs.insert(f.received_at);
    CHECK(seqs.size() == 32);
  }

  server.stop();
}

TEST_CASE("unreachable collector") {
  // Bind then release a port so nothing listens there.
  int dead_port = 0;
  {
    RecordStore store;
    CollectorService svc(store);
    CollectorServer probe(svc, "127.0.0.1", 0);
    probe.start();
    dead_port = probe.port();
    probe.stop();
  }
  const std::string addr = "127.0.0.1:" + std::to_string(dead_port);
  http::NetworkClient net(addr, std::chrono::milliseconds(500));
  CHECK_FALSE(net.send({"GET", "http://" + addr + "/records", {}, ""}).has_value());

  auto leg = dispatch::find_plan("coffee-shop")->legs.at(0);
  leg.collector_address = addr;
  leg.tag = dispatch::make_beacon_tag(addr, leg.tag_location, 1);
  const auto r = dispatch::run_scenario(leg, net);
  CHECK(r.collector_unreachable);
}

TEST_CASE("address already in use") {
  RecordStore store;
  CollectorService svc(store);
  CollectorServer a(svc, "127.0.0.1", 0);
  a.start();
  CollectorServer b(svc, "127.0.0.1", a.port());
  try {
    b.start();
    FAIL("second bind succeeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IoError);
  }
  a.stop();
}

TEST_CASE("split_address") {
  CHECK(http::split_address("127.0.0.1:8882") == std::pair<std::string, int>{"127.0.0.1", 8882});
  CHECK_FALSE(http::split_address("127.0.0.1").has_value());
  CHECK_FALSE(http::split_address("host:99999").has_value());
  CHECK_FALSE(http::split_address("host:x").has_value());
}
