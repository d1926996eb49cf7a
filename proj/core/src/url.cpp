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

#include "nfctk/url.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nfctk::url {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string Url::host_port() const {
  std::string out = host_lower;
  if (port) out += ":" + std::to_string(*port);
  return out;
}

std::optional<Url> parse(std::string_view text) {
  Url u;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  u.scheme = text.substr(0, colon);
  if (!std::isalpha(static_cast<unsigned char>(u.scheme[0]))) return std::nullopt;
  for (char c : u.scheme) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return std::nullopt;
  }
  u.scheme_lower = to_lower(u.scheme);

  std::size_t pos = colon + 1;
  std::size_t rest_end = text.size();
  const auto hash = text.find('#', pos);
  if (hash != std::string_view::npos) rest_end = hash;

  if (text.substr(pos).starts_with("//")) {
    u.has_authority = true;
    pos += 2;
    const auto auth_end = std::min(text.find_first_of("/?#", pos), rest_end);
    auto authority = text.substr(pos, auth_end - pos);
    if (auto at = authority.rfind('@'); at != std::string_view::npos) authority.remove_prefix(at + 1);
    auto host = authority;
    if (auto pc = authority.rfind(':');
        pc != std::string_view::npos && authority.find(']', pc) == std::string_view::npos) {
      host = authority.substr(0, pc);
      const auto port_text = authority.substr(pc + 1);
      if (!port_text.empty()) {
        std::uint16_t port = 0;
        auto [p, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
        if (ec != std::errc() || p != port_text.data() + port_text.size()) return std::nullopt;
        u.port = port;
      }
    }
    if (host.empty()) return std::nullopt;
    u.host = host;
    u.host_lower = to_lower(host);
    pos = auth_end;
  } else {
    u.opaque = text.substr(pos, rest_end - pos);
  }

  const auto q = text.find('?', pos);
  if (q != std::string_view::npos && q < rest_end) {
    if (u.has_authority) u.path = text.substr(pos, q - pos);
    u.query = text.substr(q + 1, rest_end - q - 1);
    u.query_offset = q + 1;
  } else if (u.has_authority) {
    u.path = text.substr(pos, rest_end - pos);
  }
  return u;
}

std::vector<QueryParam> parse_query(std::string_view query, std::size_t base_offset) {
  std::vector<QueryParam> out;
  std::size_t start = 0;
  while (start <= query.size()) {
    auto amp = query.find('&', start);
    const auto end = amp == std::string_view::npos ? query.size() : amp;
    const auto pair = query.substr(start, end - start);
    if (!pair.empty()) {
      QueryParam p;
      const auto eq = pair.find('=');
      p.name = pair.substr(0, eq);
      p.value = eq == std::string_view::npos ? std::string_view{} : pair.substr(eq + 1);
      p.begin = base_offset + start;
      p.end = base_offset + end;
      out.push_back(p);
    }
    if (amp == std::string_view::npos) break;
    start = amp + 1;
  }
  return out;
}

std::string registrable_domain(std::string_view host) {
  std::string h = to_lower(host);
  while (!h.empty() && h.back() == '.') h.pop_back();
  const auto last = h.rfind('.');
  if (last == std::string::npos || last == 0) return h;
  const auto prev = h.rfind('.', last - 1);
  return prev == std::string::npos ? h : h.substr(prev + 1);
}

bool is_ip_literal(std::string_view host) {
  if (host.starts_with('[')) return true;
  return !host.empty() && std::all_of(host.begin(), host.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  });
}

}  // namespace nfctk::url
