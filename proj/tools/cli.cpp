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

#include "cli.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <memory>
#include <thread>

#include "nfctk/collector_server.hpp"
#include "nfctk/error.hpp"
#include "nfctk/scenario.hpp"
#include "nfctk/threat.hpp"
#include "nfctk/vcard.hpp"

namespace nfctk::cli {

namespace {

using nlohmann::json;
using tags::DumpFormat;

volatile std::sig_atomic_t g_stop = 0;
extern "C" void on_signal(int) { g_stop = 1; }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DumpFormat fmt(bool hex) { return hex ? DumpFormat::Hex : DumpFormat::Binary; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::string tnf_name(ndef::Tnf t) {
  switch (t) {
    case ndef::Tnf::Empty: return "empty";
    case ndef::Tnf::WellKnown: return "well-known";
    case ndef::Tnf::Mime: return "mime";
    case ndef::Tnf::AbsoluteUri: return "absolute-uri";
    case ndef::Tnf::External: return "external";
    case ndef::Tnf::Unknown: return "unknown";
    case ndef::Tnf::Unchanged: return "unchanged";
    case ndef::Tnf::Reserved: return "reserved";
  }
  return "?";
}

// One record as {kind, ...}. Content that does not decode falls back to hex.
json record_json(const ndef::NdefRecord& rec) {
  json j{{"tnf", tnf_name(rec.tnf())}, {"type", rec.type_string()}};
  if (rec.id()) j["id"] = to_hex(*rec.id());
  try {
    if (rec.is_uri()) {
      j["kind"] = "uri";
      j["uri"] = ndef::decode_uri_record(rec);
      return j;
    }
    if (rec.is_text()) {
      const auto t = ndef::decode_text_record(rec);
      j["kind"] = "text";
      j["lang"] = t.lang;
      j["text"] = t.text;
      return j;
    }
    if (rec.is_vcard()) {
      const auto c = ndef::parse_vcard(rec.payload());
      j["kind"] = "vcard";
      j["fn"] = c.full_name;
      j["n"] = c.name_parts;
      j["tel"] = c.tel;
      j["email"] = c.email;
      return j;
    }
  } catch (const Error&) {
    // shown raw below
  }
  j["kind"] = rec.tnf() == ndef::Tnf::Empty ? "empty" : "raw";
  j["payload_hex"] = to_hex(rec.payload());
  return j;
}

std::string record_line(const json& r) {
  const auto kind = r["kind"].get<std::string>();
  if (kind == "uri") return "URI   " + r["uri"].get<std::string>();
  if (kind == "text") return "Text  [" + r["lang"].get<std::string>() + "] " + r["text"].get<std::string>();
  if (kind == "vcard") {
    std::string s = "vCard FN=" + r["fn"].get<std::string>();
    if (!r["tel"].get<std::string>().empty()) s += " TEL=" + r["tel"].get<std::string>();
    if (!r["email"].get<std::string>().empty()) s += " EMAIL=" + r["email"].get<std::string>();
    return s;
  }
  if (kind == "empty") return "Empty";
  return "Raw   tnf=" + r["tnf"].get<std::string>() + " type=" + r["type"].get<std::string>() +
         " payload=" + r["payload_hex"].get<std::string>();
}

std::string trace_line(const dispatch::TraceEvent& e) {
  using namespace dispatch;
  std::string s = event_kind(e);
  if (auto* x = std::get_if<HttpRequestEvent>(&e)) s += " " + x->url;
  if (auto* x = std::get_if<CookieStored>(&e)) s += " " + x->name + "=" + x->value;
  if (auto* x = std::get_if<FingerprintPosted>(&e)) s += " " + hash_hex(x->hash);
  if (auto* x = std::get_if<ContactAdded>(&e)) s += " " + x->contact.full_name;
  if (auto* x = std::get_if<DialerOpened>(&e)) s += " " + x->number;
  if (auto* x = std::get_if<EmailComposerOpened>(&e)) s += " " + x->address;
  if (auto* x = std::get_if<Redirect>(&e)) s += " " + x->url + " after " + std::to_string(x->delay_ms) + " ms";
  if (auto* x = std::get_if<CollectorUnreachable>(&e)) s += " " + x->url;
  return s;
}

void print_report(std::ostream& out, const dispatch::ScenarioReport& r) {
  out << "scenario  " << r.scenario << "\n";
  out << "action    " << dispatch::describe(r.action) << "\n";
  if (r.attacker_observed) out << "observed  " << to_hex(*r.attacker_observed) << "\n";
  out << "trace" << (r.trace.empty() ? "     (empty)" : "") << "\n";
  for (const auto& e : r.trace) out << "  " << trace_line(e) << "\n";
  out << "collector +" << r.collector_delta.locations.size() << " location(s), +"
      << r.collector_delta.fingerprints.size() << " fingerprint(s)";
  if (r.collector_unreachable) out << " [unreachable]";
  out << "\n";
  for (const auto& l : r.collector_delta.locations) {
    out << "  location " << (l.lat ? dispatch::format_coordinate(*l.lat) : "?") << ","
        << (l.lon ? dispatch::format_coordinate(*l.lon) : "?") << " cookie " << l.cookie_id << "\n";
  }
  for (const auto& f : r.collector_delta.fingerprints) out << "  fingerprint " << dispatch::hash_hex(f.hash) << "\n";
}

// In-process collector unless --live asks for a running one.
struct Harness {
  collector::RecordStore store;
  collector::CollectorService service{store};
  std::unique_ptr<http::Client> client;

  Harness(const std::string& address, bool live) {
    if (live) {
      client = std::make_unique<http::NetworkClient>(address);
    } else {
      client = std::make_unique<http::LoopbackClient>(service, address);
    }
  }
};

int cmd_encode(std::ostream& out, const std::string& uri, bool vcard, const std::optional<std::string>& text,
               const std::string& lang, const ndef::Contact& contact, const std::string& output, bool hex,
               std::size_t capacity, std::uint64_t seed) {
  const int kinds = !uri.empty() + static_cast<int>(vcard) + static_cast<int>(text.has_value());
  if (kinds != 1) throw UsageError("encode: give exactly one of --uri, --vcard, --text");
  if (vcard && contact.full_name.empty()) throw UsageError("encode --vcard: --fn is required");

  ndef::NdefRecord rec = !uri.empty() ? ndef::build_uri_record(uri)
                         : vcard      ? ndef::build_vcard_record(contact)
                                      : ndef::build_text_record(lang, *text);
  const auto tag = tags::create_tag(capacity, ndef::NdefMessage{std::move(rec)}, seed);
  tags::save_dump(tag, output, fmt(hex));
  out << "wrote " << tag.bytes().size() << " bytes to " << output << "\n";
  return 0;
}

int cmd_decode(std::ostream& out, const std::string& path, bool hex, bool as_json) {
  const auto msg = ndef::parse_message(tags::read_dump_bytes(path, fmt(hex)));
  json recs = json::array();
  for (const auto& r : msg.records()) recs.push_back(record_json(r));
  if (as_json) {
    out << json{{"records", recs}}.dump(2, ' ', false, json::error_handler_t::replace) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < recs.size(); ++i) out << "[" << i << "] " << record_line(recs[i]) << "\n";
  return 0;
}

int cmd_scan(std::ostream& out, const std::string& path, const std::string& config, const std::string& page,
             bool hex, bool as_json) {
  const auto cfg = config.empty() ? threat::default_config() : threat::load_config_file(config);
  const auto msg = ndef::parse_message(tags::read_dump_bytes(path, fmt(hex)));
  std::optional<std::string> body;
  if (!page.empty()) body = read_text_file(page);
  const auto report = threat::analyze_message(msg, cfg, body ? std::optional<std::string_view>(*body) : std::nullopt);
  if (as_json) {
    out << threat::report_to_json(report) << "\n";
  } else if (report.findings.empty()) {
    out << "no findings\n";
  } else {
    for (const auto& f : report.findings) {
      out << threat::severity_name(f.severity) << "\t" << threat::class_name(f.threat_class) << "\t"
          << (f.record_index ? "record " + std::to_string(*f.record_index) : std::string("page")) << "\t\""
          << f.evidence << "\"\t" << f.detail << "\n";
    }
  }
  return report.exit_code();
}

int cmd_simulate(std::ostream& out, const std::string& path, bool live, bool as_json) {
  const auto s = dispatch::load_scenario_file(path);
  Harness h(s.collector_address, live);
  const auto r = dispatch::run_scenario(s, *h.client);
  if (as_json) {
    out << dispatch::report_to_json(r) << "\n";
  } else {
    print_report(out, r);
  }
  return 0;
}

int cmd_scenario_list(std::ostream& out, bool as_json) {
  json arr = json::array();
  for (const auto& p : dispatch::builtin_plans()) {
    if (as_json) {
      arr.push_back({{"name", p.name}, {"description", p.description}, {"legs", p.legs.size()}});
    } else {
      out << p.name << "\t" << p.description << "\n";
    }
  }
  if (as_json) out << arr.dump(2) << "\n";
  return 0;
}

int cmd_scenario_run(std::ostream& out, const std::string& name, bool live, bool as_json) {
  const auto plan = dispatch::find_plan(name);
  if (!plan) throw UsageError("unknown scenario '" + name + "' (try: scenario list)");
  Harness h(plan->legs.front().collector_address, live);
  const auto reports = dispatch::run_plan(*plan, *h.client);
  if (as_json) {
    out << dispatch::reports_to_json(reports) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out << "\n";
    print_report(out, reports[i]);
  }
  return 0;
}

int cmd_serve(std::ostream& out, const std::string& host, int port, const std::string& store_path, bool fsync) {
  std::unique_ptr<collector::RecordStore> store =
      store_path.empty() ? std::make_unique<collector::RecordStore>()
                         : std::make_unique<collector::RecordStore>(store_path, fsync);
  collector::CollectorService service(*store);
  collector::CollectorServer server(service, host, port);
  server.start();
  out << "collector listening on " << server.address() << "\n" << std::flush;

  g_stop = 0;
  auto prev_int = std::signal(SIGINT, on_signal);
  auto prev_term = std::signal(SIGTERM, on_signal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  std::signal(SIGINT, prev_int);
  std::signal(SIGTERM, prev_term);
  server.stop();
  out << "stopped, " << store->snapshot().size() << " record(s)\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"NFC tag security toolkit", "nfctk"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json follow the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // encode
  auto* enc = app.add_subcommand("encode", "build a tag dump");
  std::string uri, output, lang = "en";
  std::optional<std::string> text;
  bool vcard = false, enc_hex = false;
  ndef::Contact contact;
  std::size_t capacity = tags::kMaxCapacity;
  std::uint64_t seed = 0;
  enc->add_option("--uri", uri, "URI record");
  enc->add_flag("--vcard", vcard, "vCard record (use --fn/--tel/--email/--n)");
  enc->add_option("--text", text, "text record");
  enc->add_option("--lang", lang, "language of --text")->capture_default_str();
  enc->add_option("--fn", contact.full_name, "vCard formatted name");
  enc->add_option("--tel", contact.tel, "vCard phone");
  enc->add_option("--email", contact.email, "vCard email");
  enc->add_option("--n", contact.name_parts, "vCard structured name, e.g. \"MC;Mr.;\"");
  enc->add_option("-o,--output", output, "dump file")->required();
  enc->add_flag("--hex", enc_hex, "write hex text instead of raw bytes");
  enc->add_option("--capacity", capacity, "tag capacity in bytes")->capture_default_str();
  enc->add_option("--seed", seed, "UID seed")->capture_default_str();

  // decode
  auto* dec = app.add_subcommand("decode", "print the records of a tag dump");
  std::string dec_path;
  bool dec_hex = false;
  dec->add_option("dump", dec_path, "tag dump")->required();
  dec->add_flag("--hex", dec_hex, "dump is hex text");

  // scan
  auto* scan = app.add_subcommand("scan", "classify tag content; exit 0 clean, 1 up to Medium, 2 High or worse");
  std::string scan_path, config, page;
  bool scan_hex = false;
  scan->add_option("dump", scan_path, "tag dump")->required();
  scan->add_option("--config", config, "analyzer config (JSON)");
  scan->add_option("--page", page, "page body served by the tag's URL");
  scan->add_flag("--hex", scan_hex, "dump is hex text");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run a scenario file");
  std::string sim_path;
  bool sim_live = false;
  sim->add_option("scenario", sim_path, "scenario file (JSON)")->required();
  sim->add_flag("--live", sim_live, "talk to a running collector instead of an in-process one");

  // serve
  auto* serve = app.add_subcommand("serve", "run the collector until interrupted");
  std::string host = "127.0.0.1", store_path;
  int port = collector::kDefaultPort;
  bool fsync = false;
  serve->add_option("--host", host, "bind address")->capture_default_str();
  serve->add_option("--port", port, "port, 0 for ephemeral")->capture_default_str()->check(CLI::Range(0, 65535));
  serve->add_option("--store", store_path, "append records to this file");
  serve->add_flag("--fsync", fsync, "fsync after every record");

  // scenario
  auto* scn = app.add_subcommand("scenario", "built-in scenarios");
  scn->require_subcommand(1);
  auto* scn_list = scn->add_subcommand("list", "list built-in scenarios");
  auto* scn_run = scn->add_subcommand("run", "run a built-in scenario");
  std::string scn_name;
  bool scn_live = false;
  scn_run->add_option("name", scn_name, "scenario name")->required();
  scn_run->add_flag("--live", scn_live, "talk to a running collector instead of an in-process one");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enc) return cmd_encode(out, uri, vcard, text, lang, contact, output, enc_hex, capacity, seed);
    if (*dec) return cmd_decode(out, dec_path, dec_hex, as_json);
    if (*scan) return cmd_scan(out, scan_path, config, page, scan_hex, as_json);
    if (*sim) return cmd_simulate(out, sim_path, sim_live, as_json);
    if (*serve) return cmd_serve(out, host, port, store_path, fsync);
    if (*scn_list) return cmd_scenario_list(out, as_json);
    if (*scn_run) return cmd_scenario_run(out, scn_name, scn_live, as_json);
  } catch (const UsageError& e) {
    err << "nfctk: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "nfctk: " << e.what() << "\n";
    return e.is_io() ? kExitIo : kExitData;
  } catch (const std::exception& e) {
    err << "nfctk: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace nfctk::cli
