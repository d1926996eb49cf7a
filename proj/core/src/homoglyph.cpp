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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "nfctk/homoglyph.hpp"
#include "utf8.hpp"
#include "nfctk/url.hpp"

namespace nfctk::threat {

namespace {

// Confusable code point -> ASCII replacement.
constexpr std::pair<std::uint32_t, char> kConfusables[] = {
    {0x00E1, 'a'}, {0x00E9, 'e'}, {0x00ED, 'i'}, {0x00F3, 'o'}, {0x00FA, 'u'},
    {'0', 'o'},    {'1', 'l'},    {0x0430, 'a'}, {0x0435, 'e'}, {0x043E, 'o'},
};

// Decodes one UTF-8 sequence at `pos`; malformed bytes decode as themselves.
std::uint32_t next_code_point(std::string_view s, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  int len = b0 < 0x80 ? 1 : (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : (b0 >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || pos + static_cast<std::size_t>(len) > s.size()) {
    ++pos;
    return b0;
  }
  std::uint32_t cp = len == 1 ? b0 : b0 & (0x7F >> len);
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(k)]);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += static_cast<std::size_t>(len);
  return cp;
}


void replace_all(std::string& s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

}  // namespace

std::string decode_idn_host(std::string_view host) {
  std::string out;
  std::size_t start = 0;
  while (true) {
    const auto dot = host.find('.', start);
    const auto label = host.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    const auto lower = url::to_lower(label);
    std::optional<std::string> decoded;
    if (lower.starts_with("xn--")) decoded = punycode_decode(std::string_view(lower).substr(4));
    out += decoded ? *decoded : std::string(label);
    if (dot == std::string_view::npos) break;
    out.push_back('.');
    start = dot + 1;
  }
  return out;
}

std::string skeleton(std::string_view host_utf8) {
  std::string out;
  std::size_t pos = 0;
  while (pos < host_utf8.size()) {
    const auto start = pos;
    auto cp = next_code_point(host_utf8, pos);
    if (pos == start + 1 && cp >= 0x80) {  // stray byte, keep as is
      out.push_back(host_utf8[start]);
      continue;
    }
    if (cp >= 'A' && cp <= 'Z') cp = cp - 'A' + 'a';
    const auto* hit = std::find_if(std::begin(kConfusables), std::end(kConfusables),
                                   [cp](const auto& e) { return e.first == cp; });
    if (hit != std::end(kConfusables)) {
      out.push_back(hit->second);
    } else {
      detail::append_utf8(out, cp);
    }
  }
  replace_all(out, "rn", "m");
  replace_all(out, "vv", "w");
  return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace nfctk::threat
