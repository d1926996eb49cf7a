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

#include "nfctk/scenario.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <json.hpp>

#include "nfctk/error.hpp"
#include "overloaded.hpp"

namespace nfctk::dispatch {

using detail::overloaded;
using nlohmann::json;

namespace {

std::optional<collector::Snapshot> fetch_snapshot(http::Client& client, const std::string& address) {
  const auto res = client.send({"GET", "http://" + address + std::string(collector::kRecordsPath), {}, ""});
  if (!res || res->status != 200) return std::nullopt;
  try {
    return collector::snapshot_from_json(res->body);
  } catch (const Error&) {
    return std::nullopt;
  }
}

json contact_json(const ndef::Contact& c) {
  return {{"full_name", c.full_name}, {"tel", c.tel}, {"email", c.email}, {"name_parts", c.name_parts}};
}

json action_json(const DispatchAction& a) {
  return std::visit(overloaded{
                        [](const OpenUrl& x) { return json{{"kind", "OpenUrl"}, {"url", x.url}}; },
                        [](const Dial& x) { return json{{"kind", "Dial"}, {"number", x.number}}; },
                        [](const ComposeEmail& x) { return json{{"kind", "ComposeEmail"}, {"address", x.address}}; },
                        [](const AddContact& x) { return json{{"kind", "AddContact"}, {"contact", contact_json(x.contact)}}; },
                        [](const NoAction& x) { return json{{"kind", "NoAction"}, {"reason", reason_name(x.reason)}}; },
                    },
                    a);
}

json components_json(const Components& comps) {
  json arr = json::array();
  for (const auto& [k, v] : comps) arr.push_back({{"key", k}, {"value", v}});
  return arr;
}

json event_json(const TraceEvent& e) {
  json j = std::visit(
      overloaded{
          [](const HttpRequestEvent& x) {
            json params = json::object();
            for (const auto& [k, v] : x.query_params) params[k] = v;
            return json{{"url", x.url}, {"query_params", params}};
          },
          [](const CookieStored& x) { return json{{"name", x.name}, {"value", x.value}}; },
          [](const FingerprintPosted& x) {
            return json{{"hash", hash_hex(x.hash)}, {"components", components_json(x.components)}};
          },
          [](const ContactAdded& x) { return json{{"contact", contact_json(x.contact)}}; },
          [](const DialerOpened& x) { return json{{"number", x.number}}; },
          [](const EmailComposerOpened& x) { return json{{"address", x.address}}; },
          [](const Redirect& x) { return json{{"url", x.url}, {"delay_ms", x.delay_ms}}; },
          [](const CollectorUnreachable& x) { return json{{"url", x.url}}; },
      },
      e);
  j["kind"] = event_kind(e);
  return j;
}

json report_json(const ScenarioReport& r) {
  json trace = json::array();
  for (const auto& e : r.trace) trace.push_back(event_json(e));
  return {{"scenario", r.scenario},
          {"action", action_json(r.action)},
          {"trace", trace},
          {"attacker_observed", r.attacker_observed ? json(to_hex(*r.attacker_observed)) : json(nullptr)},
          {"collector_delta", json::parse(collector::snapshot_to_json(r.collector_delta))},
          {"collector_unreachable", r.collector_unreachable}};
}

ChannelAttacker parse_attacker(const std::string& text, const std::filesystem::path& base_dir) {
  if (text.empty() || text == "none") return NoAttacker{};
  if (text == "eavesdrop") return Eavesdrop{};
  if (text.starts_with("corrupt:")) {
    const auto n = std::string_view(text).substr(8);
    std::size_t idx = 0;
    auto [end, ec] = std::from_chars(n.data(), n.data() + n.size(), idx);
    if (ec != std::errc() || end != n.data() + n.size()) throw Error(Errc::BadConfig, "bad corrupt index: " + text);
    return Corrupt{idx};
  }
  if (text.starts_with("replace:")) {
    std::filesystem::path p = text.substr(8);
    if (p.is_relative()) p = base_dir / p;
    return Replace{ndef::parse_message(tags::read_dump_bytes(p))};
  }
  throw Error(Errc::BadConfig, "unknown attacker '" + text + "'");
}

}  // namespace

std::string format_coordinate(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ec == std::errc() ? end : buf);
}

std::string location_beacon_url(std::string_view collector_address, GeoPoint where) {
  return "http://" + std::string(collector_address) + std::string(collector::kTrackPath) +
         "?lat=" + format_coordinate(where.lat) + "&long=" + format_coordinate(where.lon);
}

tags::TagImage make_beacon_tag(std::string_view collector_address, GeoPoint where, std::uint64_t seed) {
  return tags::create_tag(144, ndef::NdefMessage{ndef::build_uri_record(location_beacon_url(collector_address, where))},
                          seed);
}

ScenarioReport run_scenario(const Scenario& s, Browser& browser, http::Client& client) {
  ScenarioReport r;
  r.scenario = s.name;
  const auto before = fetch_snapshot(client, s.collector_address);

  if (auto gate = device_gate(s.device)) {
    r.action = NoAction{*gate};
  } else {
    auto channel = interpose_channel(s.tag.bytes(), s.attacker);
    r.attacker_observed = std::move(channel.observed);
    r.action = apply_policy(discover_tag(channel.delivered, s.device), s.policy);
    r.trace = browser.execute(r.action, s.device, s.collector_address);
  }

  for (const auto& e : r.trace) {
    if (std::holds_alternative<CollectorUnreachable>(e)) r.collector_unreachable = true;
  }
  const auto after = fetch_snapshot(client, s.collector_address);
  if (before && after) r.collector_delta = after->since(*before);
  return r;
}

ScenarioReport run_scenario(const Scenario& s, http::Client& client) {
  Browser browser(client);
  return run_scenario(s, browser, client);
}

std::vector<ScenarioReport> run_plan(const ScenarioPlan& plan, http::Client& client) {
  Browser browser(client);
  std::vector<ScenarioReport> out;
  for (const auto& leg : plan.legs) out.push_back(run_scenario(leg, browser, client));
  return out;
}

const std::vector<ScenarioPlan>& builtin_plans() {
  static const std::vector<ScenarioPlan> kPlans = [] {
    const std::string collector = "127.0.0.1:" + std::to_string(collector::kDefaultPort);
    const GeoPoint cafe{22.2819, 114.1577};
    const GeoPoint station_a{22.2849, 114.1583};
    const GeoPoint station_b{22.3372, 114.1745};

    std::vector<ScenarioPlan> plans;
    plans.push_back(ScenarioPlan{
        "coffee-shop",
        "beacon tag under a cafe table read by an unlocked handset left on the table",
        {Scenario{"coffee-shop", make_beacon_tag(collector, cafe, 1), cafe, *find_preset("oneplus-3t"), AutoOpen{},
                  NoAttacker{}, collector}}});
    plans.push_back(ScenarioPlan{
        "transit",
        "beacon tags at two stations read by the same commuter handset",
        {Scenario{"transit/station-a", make_beacon_tag(collector, station_a, 11), station_a,
                  *find_preset("samsung-c7"), AutoOpen{}, NoAttacker{}, collector},
         Scenario{"transit/station-b", make_beacon_tag(collector, station_b, 12), station_b,
                  *find_preset("samsung-c7"), AutoOpen{}, NoAttacker{}, collector}}});
    return plans;
  }();
  return kPlans;
}

std::optional<ScenarioPlan> find_plan(std::string_view name) {
  for (const auto& p : builtin_plans()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(Errc::BadConfig, std::string("scenario: ") + e.what());
  }
  try {
    const auto preset_key = j.value("device_preset", std::string("oneplus-3t"));
    auto device = find_preset(preset_key);
    if (!device) throw Error(Errc::BadConfig, "unknown device preset '" + preset_key + "'");
    device->unlocked = j.value("unlocked", true);
    device->nfc_enabled = j.value("nfc_enabled", true);

    const auto policy_name = j.value("policy", std::string("auto"));
    auto policy = parse_policy(policy_name);
    if (!policy) throw Error(Errc::BadConfig, "unknown policy '" + policy_name + "'");

    std::filesystem::path dump = j.at("tag_dump").get<std::string>();
    if (dump.is_relative()) dump = base_dir / dump;
    const auto fmt = j.value("tag_dump_hex", false) ? tags::DumpFormat::Hex : tags::DumpFormat::Binary;
    auto tag = tags::load_dump(dump, j.value("tag_capacity", tags::kMaxCapacity),
                               tags::derive_uid(j.value("tag_seed", std::uint64_t{0})), fmt);

    return Scenario{j.value("name", std::string("scenario")),
                    std::move(tag),
                    GeoPoint{j.value("tag_lat", 0.0), j.value("tag_long", 0.0)},
                    *device,
                    *policy,
                    parse_attacker(j.value("attacker", std::string("none")), base_dir),
                    j.value("collector", "127.0.0.1:" + std::to_string(collector::kDefaultPort))};
  } catch (const json::exception& e) {
    throw Error(Errc::BadConfig, std::string("scenario: ") + e.what());
  }
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_scenario(text, path.parent_path());
}

std::string report_to_json(const ScenarioReport& r, int indent) { return report_json(r).dump(indent); }

std::string reports_to_json(const std::vector<ScenarioReport>& reports, int indent) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(indent);
}

}  // namespace nfctk::dispatch
