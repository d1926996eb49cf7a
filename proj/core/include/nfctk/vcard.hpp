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

#include <string>
#include <string_view>
#include <vector>

#include "nfctk/ndef.hpp"

namespace nfctk::ndef {

struct Contact {
  std::string full_name;   // FN
  std::string tel;         // first TEL value, without the "tel:" URI scheme
  std::string email;       // first EMAIL
  std::string name_parts;  // raw N value, e.g. "MC;Mr.;"

  // Unrecognized content lines, kept verbatim. Not part of equality.
  std::vector<std::string> extras;

  friend bool operator==(const Contact& a, const Contact& b) {
    return a.full_name == b.full_name && a.tel == b.tel && a.email == b.email &&
           a.name_parts == b.name_parts;
  }
};

/// VERSION:4.0 vCard text, CRLF line endings. Empty N/TEL/EMAIL are omitted.
std::string render_vcard(const Contact& c);

/// MIME record of type text/vcard carrying render_vcard(c).
NdefRecord build_vcard_record(const Contact& c);

/// Line-oriented parse; accepts CRLF or LF. Throws Error(NotAVcard) if the
/// BEGIN:VCARD / END:VCARD envelope is missing.
Contact parse_vcard(std::string_view text);
Contact parse_vcard(std::span<const std::uint8_t> payload);

}  // namespace nfctk::ndef
