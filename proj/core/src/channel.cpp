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

#include "nfctk/channel.hpp"

#include <string>

#include "nfctk/error.hpp"
#include "overloaded.hpp"

namespace nfctk::dispatch {

using detail::overloaded;

ChannelResult interpose_channel(std::span<const std::uint8_t> bytes, const ChannelAttacker& attacker) {
  Bytes input(bytes.begin(), bytes.end());
  return std::visit(overloaded{
                        [&](const NoAttacker&) { return ChannelResult{std::move(input), std::nullopt}; },
                        [&](const Eavesdrop&) { return ChannelResult{input, input}; },
                        [&](const Corrupt& c) {
                          if (c.byte_index >= input.size()) {
                            throw Error(Errc::IndexOutOfRange, "corrupt index " + std::to_string(c.byte_index) +
                                                                   " past " + std::to_string(input.size()) +
                                                                   "-byte exchange");
                          }
                          input[c.byte_index] ^= 0xff;
                          return ChannelResult{std::move(input), std::nullopt};
                        },
                        [&](const Replace& r) { return ChannelResult{ndef::serialize_message(r.message), std::nullopt}; },
                    },
                    attacker);
}

std::string attacker_name(const ChannelAttacker& attacker) {
  return std::visit(overloaded{
                        [](const NoAttacker&) -> std::string { return "none"; },
                        [](const Eavesdrop&) -> std::string { return "eavesdrop"; },
                        [](const Corrupt& c) { return "corrupt:" + std::to_string(c.byte_index); },
                        [](const Replace&) -> std::string { return "replace"; },
                    },
                    attacker);
}

}  // namespace nfctk::dispatch
