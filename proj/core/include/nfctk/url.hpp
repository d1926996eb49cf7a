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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nfctk::url {

/// Components of a URI, borrowed from the parsed string. `host` is lowercased
/// separately in `host_lower` so detectors can compare case-insensitively
/// while evidence spans still point into the original text.
struct Url {
  std::string_view scheme;     // lowercase not guaranteed; see scheme_lower
  std::string scheme_lower;
  bool has_authority = false;  // "scheme://..."
  std::string_view host;
  std::string host_lower;
  std::optional<std::uint16_t> port;
  std::string_view path;       // "" for "http://host?x"
  std::string_view query;      // without '?'
  std::size_t query_offset = 0;  // index of query[0] in the source string
  std::string_view opaque;     // everything after "scheme:" for non-hierarchical URIs

  std::string host_port() const;
};

/// Returns nullopt when there is no scheme, or a hierarchical URI without a host.
std::optional<Url> parse(std::string_view text);

struct QueryParam {
  std::string_view name;
  std::string_view value;
  std::size_t begin = 0;  // offsets of "name=value" within the source string
  std::size_t end = 0;
};

/// Splits on '&'; values are kept verbatim (no percent-decoding).
std::vector<QueryParam> parse_query(std::string_view query, std::size_t base_offset = 0);

std::string to_lower(std::string_view s);

/// Last two dot-separated labels ("mail.google.com" -> "google.com").
std::string registrable_domain(std::string_view host);

bool is_ip_literal(std::string_view host);

}  // namespace nfctk::url
