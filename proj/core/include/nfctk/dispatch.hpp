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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "nfctk/device.hpp"
#include "nfctk/ndef.hpp"
#include "nfctk/vcard.hpp"

namespace nfctk::dispatch {

// Mitigation policies -------------------------------------------------------

struct AutoOpen {
  friend bool operator==(const AutoOpen&, const AutoOpen&) = default;
};
/// Ask before acting; `user_allows` is the user's answer.
struct Prompt {
  bool user_allows = false;
  friend bool operator==(const Prompt&, const Prompt&) = default;
};
/// Post a notification instead of acting; `released` once the user taps it.
struct Notify {
  bool released = false;
  friend bool operator==(const Notify&, const Notify&) = default;
};
using PolicyMode = std::variant<AutoOpen, Prompt, Notify>;

std::string policy_name(const PolicyMode& p);
/// Accepts "auto", "prompt-allow", "prompt-deny", "notify-released", "notify-pending".
std::optional<PolicyMode> parse_policy(std::string_view name);

// Actions -------------------------------------------------------------------

enum class NoActionReason {
  DeviceLocked,
  NfcDisabled,
  ParseError,
  PolicyDenied,
  PolicyDeferred,
  EmptyTag,
  Unhandled,  // well-formed content the platform has no automatic handler for
};
std::string_view reason_name(NoActionReason r);

struct OpenUrl {
  std::string url;
  friend bool operator==(const OpenUrl&, const OpenUrl&) = default;
};
struct Dial {
  std::string number;
  friend bool operator==(const Dial&, const Dial&) = default;
};
struct ComposeEmail {
  std::string address;
  friend bool operator==(const ComposeEmail&, const ComposeEmail&) = default;
};
struct AddContact {
  ndef::Contact contact;
  friend bool operator==(const AddContact&, const AddContact&) = default;
};
struct NoAction {
  NoActionReason reason;
  friend bool operator==(const NoAction&, const NoAction&) = default;
};
using DispatchAction = std::variant<OpenUrl, Dial, ComposeEmail, AddContact, NoAction>;

inline bool is_no_action(const DispatchAction& a) { return std::holds_alternative<NoAction>(a); }
std::string describe(const DispatchAction& a);

/// Device gate first (locked, then NFC off), then route on the first record.
DispatchAction resolve_action(const ndef::NdefMessage& msg, const DeviceProfile& device);

/// Raw tag bytes as the reader delivered them; parse failures become
/// NoAction(ParseError).
DispatchAction discover_tag(std::span<const std::uint8_t> bytes, const DeviceProfile& device);

DispatchAction apply_policy(const DispatchAction& action, const PolicyMode& policy);

/// Gate check shared by resolve_action and the reader model.
std::optional<NoActionReason> device_gate(const DeviceProfile& device);

}  // namespace nfctk::dispatch
