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

#include "nfctk/dispatch.hpp"

#include "nfctk/error.hpp"
#include "nfctk/url.hpp"
#include "overloaded.hpp"

namespace nfctk::dispatch {

using detail::overloaded;

std::string policy_name(const PolicyMode& p) {
  return std::visit(overloaded{
                        [](const AutoOpen&) -> std::string { return "auto"; },
                        [](const Prompt& x) -> std::string { return x.user_allows ? "prompt-allow" : "prompt-deny"; },
                        [](const Notify& x) -> std::string {
                          return x.released ? "notify-released" : "notify-pending";
                        },
                    },
                    p);
}

std::optional<PolicyMode> parse_policy(std::string_view name) {
  if (name == "auto") return AutoOpen{};
  if (name == "prompt-allow") return Prompt{true};
  if (name == "prompt-deny") return Prompt{false};
  if (name == "notify-released") return Notify{true};
  if (name == "notify-pending") return Notify{false};
  return std::nullopt;
}

std::string_view reason_name(NoActionReason r) {
  switch (r) {
    case NoActionReason::DeviceLocked: return "DeviceLocked";
    case NoActionReason::NfcDisabled: return "NfcDisabled";
    case NoActionReason::ParseError: return "ParseError";
    case NoActionReason::PolicyDenied: return "PolicyDenied";
    case NoActionReason::PolicyDeferred: return "PolicyDeferred";
    case NoActionReason::EmptyTag: return "EmptyTag";
    case NoActionReason::Unhandled: return "Unhandled";
  }
  return "Unknown";
}

std::string describe(const DispatchAction& a) {
  return std::visit(overloaded{
                        [](const OpenUrl& x) { return "OpenUrl(" + x.url + ")"; },
                        [](const Dial& x) { return "Dial(" + x.number + ")"; },
                        [](const ComposeEmail& x) { return "ComposeEmail(" + x.address + ")"; },
                        [](const AddContact& x) { return "AddContact(" + x.contact.full_name + ")"; },
                        [](const NoAction& x) { return "NoAction(" + std::string(reason_name(x.reason)) + ")"; },
                    },
                    a);
}

std::optional<NoActionReason> device_gate(const DeviceProfile& device) {
  if (!device.unlocked) return NoActionReason::DeviceLocked;
  if (!device.nfc_enabled) return NoActionReason::NfcDisabled;
  return std::nullopt;
}

namespace {

DispatchAction route_uri(const std::string& uri) {
  const auto u = url::parse(uri);
  if (!u) return NoAction{NoActionReason::Unhandled};
  const auto& scheme = u->scheme_lower;
  if ((scheme == "http" || scheme == "https") && u->has_authority) return OpenUrl{uri};
  if (scheme == "tel") return Dial{uri.substr(u->scheme.size() + 1)};
  if (scheme == "mailto") return ComposeEmail{uri.substr(u->scheme.size() + 1)};
  return NoAction{NoActionReason::Unhandled};
}

}  // namespace

DispatchAction resolve_action(const ndef::NdefMessage& msg, const DeviceProfile& device) {
  if (auto gate = device_gate(device)) return NoAction{*gate};

  const auto& rec = msg.first();
  if (rec.tnf() == ndef::Tnf::Empty) return NoAction{NoActionReason::EmptyTag};
  if (rec.is_uri()) return route_uri(ndef::decode_uri_record(rec));
  if (rec.is_vcard()) {
    try {
      return AddContact{ndef::parse_vcard(rec.payload())};
    } catch (const Error&) {
      return NoAction{NoActionReason::ParseError};
    }
  }
  return NoAction{NoActionReason::Unhandled};
}

DispatchAction discover_tag(std::span<const std::uint8_t> bytes, const DeviceProfile& device) {
  if (auto gate = device_gate(device)) return NoAction{*gate};
  try {
    return resolve_action(ndef::parse_message(bytes), device);
  } catch (const Error&) {
    return NoAction{NoActionReason::ParseError};
  }
}

DispatchAction apply_policy(const DispatchAction& action, const PolicyMode& policy) {
  if (is_no_action(action)) return action;
  return std::visit(overloaded{
                        [&](const AutoOpen&) { return action; },
                        [&](const Prompt& p) {
                          return p.user_allows ? action : DispatchAction{NoAction{NoActionReason::PolicyDenied}};
                        },
                        [&](const Notify& n) {
                          return n.released ? action : DispatchAction{NoAction{NoActionReason::PolicyDeferred}};
                        },
                    },
                    policy);
}

}  // namespace nfctk::dispatch
