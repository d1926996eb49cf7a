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

#include <cstddef>
#include <optional>
#include <span>
#include <variant>

#include "nfctk/hex.hpp"
#include "nfctk/ndef.hpp"

namespace nfctk::dispatch {

// A device placed between the tag and the reader.

struct NoAttacker {
  friend bool operator==(const NoAttacker&, const NoAttacker&) = default;
};
/// Passive listener: records the exchange, forwards it untouched.
struct Eavesdrop {
  friend bool operator==(const Eavesdrop&, const Eavesdrop&) = default;
};
/// Jammer: flips every bit of one byte (XOR 0xFF).
struct Corrupt {
  std::size_t byte_index = 0;
  friend bool operator==(const Corrupt&, const Corrupt&) = default;
};
/// Answers in place of the genuine tag.
struct Replace {
  ndef::NdefMessage message;
  friend bool operator==(const Replace&, const Replace&) = default;
};
using ChannelAttacker = std::variant<NoAttacker, Eavesdrop, Corrupt, Replace>;

struct ChannelResult {
  Bytes delivered;
  std::optional<Bytes> observed;
};

/// Throws Error(IndexOutOfRange) for Corrupt past the end of `bytes`.
ChannelResult interpose_channel(std::span<const std::uint8_t> bytes, const ChannelAttacker& attacker);

std::string attacker_name(const ChannelAttacker& attacker);

}  // namespace nfctk::dispatch
