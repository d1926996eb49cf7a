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

#include "nfctk/vcard.hpp"

#include <algorithm>
#include <cctype>

#include "nfctk/error.hpp"

namespace nfctk::ndef {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto end = nl == std::string_view::npos ? text.size() : nl;
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

}  // namespace

std::string render_vcard(const Contact& c) {
  std::string out = "BEGIN:VCARD\r\nVERSION:4.0\r\n";
  if (!c.name_parts.empty()) out += "N:" + c.name_parts + "\r\n";
  out += "FN:" + c.full_name + "\r\n";
  if (!c.tel.empty()) out += "TEL;TYPE=work,voice;VALUE=uri:tel:" + c.tel + "\r\n";
  if (!c.email.empty()) out += "EMAIL:" + c.email + "\r\n";
  out += "END:VCARD\r\n";
  return out;
}

NdefRecord build_vcard_record(const Contact& c) {
  return NdefRecord::make(Tnf::Mime, kVcardType, render_vcard(c));
}

Contact parse_vcard(std::string_view text) {
  auto lines = split_lines(text);
  // Drop blank lines at either end so a trailing CRLF is harmless.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  auto first = std::find_if(lines.begin(), lines.end(), [](auto l) { return !l.empty(); });
  if (first == lines.end() || upper(*first) != "BEGIN:VCARD" || upper(lines.back()) != "END:VCARD" ||
      first == lines.end() - 1) {
    throw Error(Errc::NotAVcard, "missing BEGIN:VCARD/END:VCARD envelope");
  }

  Contact c;
  bool have_fn = false, have_tel = false, have_email = false, have_n = false;
  for (auto it = first + 1; it != lines.end() - 1; ++it) {
    const auto line = *it;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (!line.empty()) c.extras.emplace_back(line);
      continue;
    }
    const auto head = line.substr(0, colon);
    const auto name = upper(head.substr(0, head.find(';')));
    const auto value = line.substr(colon + 1);

    if (name == "FN" && !have_fn) {
      c.full_name = value;
      have_fn = true;
    } else if (name == "N" && !have_n) {
      c.name_parts = value;
      have_n = true;
    } else if (name == "TEL" && !have_tel) {
      // "VALUE=uri:tel:+123" and plain "TEL:+123" both reduce to the text after the last ':'.
      c.tel = line.substr(line.rfind(':') + 1);
      have_tel = true;
    } else if (name == "EMAIL" && !have_email) {
      c.email = value;
      have_email = true;
    } else if (name != "VERSION") {
      c.extras.emplace_back(line);
    }
  }
  return c;
}

Contact parse_vcard(std::span<const std::uint8_t> payload) {
  return parse_vcard(std::string_view(reinterpret_cast<const char*>(payload.data()), payload.size()));
}

}  // namespace nfctk::ndef
