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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nfctk/dispatch.hpp"
#include "nfctk/fingerprint.hpp"
#include "nfctk/http.hpp"

namespace nfctk::dispatch {

// Side effects observable after a tag was dispatched ------------------------

struct HttpRequestEvent {
  std::string url;
  std::vector<std::pair<std::string, std::string>> query_params;  // verbatim
  friend bool operator==(const HttpRequestEvent&, const HttpRequestEvent&) = default;
};
struct CookieStored {
  std::string name;
  std::string value;
  friend bool operator==(const CookieStored&, const CookieStored&) = default;
};
struct FingerprintPosted {
  std::uint64_t hash = 0;
  Components components;
  friend bool operator==(const FingerprintPosted&, const FingerprintPosted&) = default;
};
struct ContactAdded {
  ndef::Contact contact;
  friend bool operator==(const ContactAdded&, const ContactAdded&) = default;
};
struct DialerOpened {
  std::string number;
  friend bool operator==(const DialerOpened&, const DialerOpened&) = default;
};
struct EmailComposerOpened {
  std::string address;
  friend bool operator==(const EmailComposerOpened&, const EmailComposerOpened&) = default;
};
struct Redirect {
  std::string url;
  int delay_ms = 0;
  friend bool operator==(const Redirect&, const Redirect&) = default;
};
/// Network failure talking to the collector; recorded, never thrown.
struct CollectorUnreachable {
  std::string url;
  friend bool operator==(const CollectorUnreachable&, const CollectorUnreachable&) = default;
};

using TraceEvent = std::variant<HttpRequestEvent, CookieStored, FingerprintPosted, ContactAdded, DialerOpened,
                                EmailComposerOpened, Redirect, CollectorUnreachable>;
using SideEffectTrace = std::vector<TraceEvent>;

std::string event_kind(const TraceEvent& e);

inline constexpr std::string_view kRedirectTarget = "https://www.google.com";
inline constexpr int kRedirectDelayMs = 200;

/// Victim-side browser state that survives between tag reads: the cookie jar.
/// One Browser per simulated handset.
class Browser {
 public:
  explicit Browser(http::Client& client) : client_(client) {}

  /// Carries out an already-resolved, already-policed action.
  ///
  /// OpenUrl: GET the URL (sending stored cookies), store any Set-Cookie, and
  /// if the response is the fingerprint page, POST the device fingerprint to
  /// http://<collector_address>/collectFingerprint and record the scripted
  /// redirect. Redirect delays are recorded, not slept on.
  SideEffectTrace execute(const DispatchAction& action, const DeviceProfile& device,
                          const std::string& collector_address);

  /// host:port -> cookie name -> value
  const std::map<std::string, std::map<std::string, std::string>>& cookies() const { return jar_; }

 private:
  void open_url(const std::string& url, const DeviceProfile& device, const std::string& collector_address,
                SideEffectTrace& trace);

  http::Client& client_;
  std::map<std::string, std::map<std::string, std::string>> jar_;
};

}  // namespace nfctk::dispatch
