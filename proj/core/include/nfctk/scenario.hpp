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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfctk/browser.hpp"
#include "nfctk/channel.hpp"
#include "nfctk/collector.hpp"
#include "nfctk/dispatch.hpp"
#include "nfctk/tag_store.hpp"

namespace nfctk::dispatch {

struct GeoPoint {
  double lat = 0;
  double lon = 0;
  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// One tag read: where the tag is, who reads it, what sits on the channel.
struct Scenario {
  std::string name;
  tags::TagImage tag;
  GeoPoint tag_location;
  DeviceProfile device;
  PolicyMode policy = AutoOpen{};
  ChannelAttacker attacker = NoAttacker{};
  std::string collector_address = "127.0.0.1:8882";
};

struct ScenarioReport {
  std::string scenario;
  DispatchAction action = NoAction{NoActionReason::EmptyTag};
  SideEffectTrace trace;
  std::optional<Bytes> attacker_observed;
  collector::Snapshot collector_delta;
  bool collector_unreachable = false;
};

/// Reader pipeline: gate -> read tag -> channel -> parse -> resolve -> policy
/// -> execute. A gated device never powers the field, so nothing is read and
/// an eavesdropper observes nothing. Throws Error(IndexOutOfRange) for a
/// Corrupt attacker past the end of the tag content.
ScenarioReport run_scenario(const Scenario& s, Browser& browser, http::Client& client);

/// Convenience for a fresh handset: a new Browser per call.
ScenarioReport run_scenario(const Scenario& s, http::Client& client);

/// "http://<collector>/track?lat=<lat>&long=<long>" with shortest round-trip
/// decimal formatting, so the collector parses back the exact coordinates.
std::string location_beacon_url(std::string_view collector_address, GeoPoint where);

std::string format_coordinate(double v);

/// A tag placed at `where` that leaks its own position when read.
tags::TagImage make_beacon_tag(std::string_view collector_address, GeoPoint where, std::uint64_t seed);

/// A named sequence of reads by the same handset.
struct ScenarioPlan {
  std::string name;
  std::string description;
  std::vector<Scenario> legs;
};

const std::vector<ScenarioPlan>& builtin_plans();
std::optional<ScenarioPlan> find_plan(std::string_view name);

/// Runs every leg with one shared Browser.
std::vector<ScenarioReport> run_plan(const ScenarioPlan& plan, http::Client& client);

/// Scenario file (JSON):
///   { "name": "...", "tag_dump": "tag.bin", "tag_dump_hex": false,
///     "tag_lat": 22.3, "tag_long": 114.2, "device_preset": "oneplus-3t",
///     "policy": "auto", "attacker": "none|eavesdrop|corrupt:<i>|replace:<dump>",
///     "collector": "127.0.0.1:8882" }
/// Relative dump paths resolve against the scenario file's directory.
Scenario load_scenario_file(const std::filesystem::path& path);
Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir);

std::string report_to_json(const ScenarioReport& r, int indent = 2);
std::string reports_to_json(const std::vector<ScenarioReport>& reports, int indent = 2);

}  // namespace nfctk::dispatch
