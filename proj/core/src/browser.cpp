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

#include "nfctk/browser.hpp"

#include <json.hpp>

#include "nfctk/collector.hpp"
#include "nfctk/url.hpp"
#include "overloaded.hpp"

namespace nfctk::dispatch {

using detail::overloaded;

std::string event_kind(const TraceEvent& e) {
  return std::visit(overloaded{
                        [](const HttpRequestEvent&) { return "HttpRequest"; },
                        [](const CookieStored&) { return "CookieStored"; },
                        [](const FingerprintPosted&) { return "FingerprintPosted"; },
                        [](const ContactAdded&) { return "ContactAdded"; },
                        [](const DialerOpened&) { return "DialerOpened"; },
                        [](const EmailComposerOpened&) { return "EmailComposerOpened"; },
                        [](const Redirect&) { return "Redirect"; },
                        [](const CollectorUnreachable&) { return "CollectorUnreachable"; },
                    },
                    e);
}

SideEffectTrace Browser::execute(const DispatchAction& action, const DeviceProfile& device,
                                 const std::string& collector_address) {
  SideEffectTrace trace;
  std::visit(overloaded{
                 [&](const OpenUrl& a) { open_url(a.url, device, collector_address, trace); },
                 [&](const Dial& a) { trace.push_back(DialerOpened{a.number}); },
                 [&](const ComposeEmail& a) { trace.push_back(EmailComposerOpened{a.address}); },
                 [&](const AddContact& a) { trace.push_back(ContactAdded{a.contact}); },
                 [](const NoAction&) {},
             },
             action);
  return trace;
}

void Browser::open_url(const std::string& target, const DeviceProfile& device,
                       const std::string& collector_address, SideEffectTrace& trace) {
  const auto u = url::parse(target);
  HttpRequestEvent req_event{target, {}};
  if (u) {
    for (const auto& p : url::parse_query(u->query)) req_event.query_params.emplace_back(p.name, p.value);
  }
  trace.push_back(req_event);
  if (!u) {
    trace.push_back(CollectorUnreachable{target});
    return;
  }

  const auto origin = u->host_port();
  http::Request get{"GET", target, {}, ""};
  if (auto it = jar_.find(origin); it != jar_.end() && !it->second.empty()) {
    std::string cookie;
    for (const auto& [k, v] : it->second) {
      if (!cookie.empty()) cookie += "; ";
      cookie += k + "=" + v;
    }
    get.headers.emplace_back("Cookie", cookie);
  }

  const auto res = client_.send(get);
  if (!res) {
    trace.push_back(CollectorUnreachable{target});
    return;
  }
  for (const auto& sc : http::find_headers(res->headers, "Set-Cookie")) {
    const auto pair = sc.substr(0, sc.find(';'));
    const auto eq = pair.find('=');
    if (eq == std::string::npos || eq == 0) continue;
    auto name = pair.substr(0, eq);
    auto value = pair.substr(eq + 1);
    jar_[origin][name] = value;
    trace.push_back(CookieStored{std::move(name), std::move(value)});
  }

  if (http::find_header(res->headers, collector::kPageMarkerHeader) != collector::kPageMarkerValue) return;

  const auto fp = fingerprint_device(device);
  nlohmann::json body;
  body["result"] = hash_hex(fp.hash);
  body["components"] = nlohmann::json::array();
  for (const auto& [k, v] : fp.components) body["components"].push_back({{"key", k}, {"value", v}});

  const std::string collect_url = "http://" + collector_address + std::string(collector::kCollectPath);
  http::Request post{"POST", collect_url, {{"Content-Type", "application/json"}}, body.dump()};
  const auto posted = client_.send(post);
  if (!posted || posted->status >= 300) {
    trace.push_back(CollectorUnreachable{collect_url});
  } else {
    trace.push_back(FingerprintPosted{fp.hash, fp.components});
  }
  trace.push_back(Redirect{std::string(kRedirectTarget), kRedirectDelayMs});
}

}  // namespace nfctk::dispatch
