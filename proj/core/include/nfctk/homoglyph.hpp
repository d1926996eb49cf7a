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
#include <string>
#include <string_view>

namespace nfctk::threat {

/// Decodes one punycode label body (without the "xn--" prefix) to UTF-8.
/// Returns nullopt on malformed input or overflow.
std::optional<std::string> punycode_decode(std::string_view label);

/// Dot-separated host with every "xn--" label decoded; labels that fail to
/// decode are kept as-is.
std::string decode_idn_host(std::string_view host);

/// Canonical lookalike form: lowercase ASCII, fold the fixed confusable table
/// (accented vowels, digit 0/1, Cyrillic a/e/o), then collapse "rn"->"m" and
/// "vv"->"w". Input is UTF-8; invalid sequences pass through byte-wise.
std::string skeleton(std::string_view host_utf8);

/// Plain Levenshtein distance over bytes.
std::size_t edit_distance(std::string_view a, std::string_view b);

}  // namespace nfctk::threat
