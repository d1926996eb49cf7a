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

#include <charconv>
#include <json.hpp>

#include "nfctk/collector.hpp"
#include "nfctk/error.hpp"
#include "nfctk/url.hpp"

namespace nfctk::collector {

using nlohmann::json;

namespace {

std::optional<double> parse_coordinate(std::string_view text) {
  if (text.empty()) return std::nullopt;
  double v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return v;
}

http::Response plain(int status, std::string body) {
  return http::Response{status, {{"Content-Type", "text/plain"}}, std::move(body)};
}

}  // namespace

std::optional<std::string> cookie_value(std::string_view header, std::string_view name) {
  std::size_t pos = 0;
  while (pos < header.size()) {
    auto semi = header.find(';', pos);
    auto part = header.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    const auto eq = part.find('=');
    if (eq != std::string_view::npos && part.substr(0, eq) == name) {
      auto value = part.substr(eq + 1);
      while (!value.empty() && value.back() == ' ') value.remove_suffix(1);
      return std::string(value);
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return std::nullopt;
}

std::string fingerprint_page_html() {
  return R"(<!DOCTYPE html>
<html>
  <head>
    <meta charset="UTF-8">
    <title>Welcome</title>
    <script src="https://code.jquery.com/jquery-1.11.3.min.js"></script>
    <script src="https://valve.github.io/fingerprintjs2/fingerprint2.js"></script>
  </head>
  <body>
    <div id="result"></div>
    <script>
      setTimeout(function () { window.location.href = "https://www.google.com"; }, 200);
      new Fingerprint2().get(function (result, components) {
        $.ajax({
          url: '/collectFingerprint',
          type: 'POST',
          contentType: 'application/json',
          data: JSON.stringify({result: result, components: components}),
          dataType: 'json'
        });
      });
    </script>
  </body>
</html>
)";
}

http::Response CollectorService::handle(const http::Request& request) {
  const auto u = url::parse(request.url);
  if (!u) return plain(400, "bad request target\n");
  const std::string path = u->path.empty() ? "/" : std::string(u->path);

  if (path == kCollectPath) {
    if (request.method != "POST") return plain(405, "POST only\n");
    return collect(request);
  }
  if (path == kTrackPath || path == "/") {
    if (request.method != "GET") return plain(405, "GET only\n");
    return track(request);
  }
  if (path == kRecordsPath) {
    if (request.method != "GET") return plain(405, "GET only\n");
    return http::Response{200, {{"Content-Type", "application/json"}}, snapshot_to_json(store_.snapshot())};
  }
  return plain(404, "not found\n");
}

http::Response CollectorService::collect(const http::Request& request) {
  std::uint64_t hash = 0;
  dispatch::Components comps;
  try {
    const auto body = json::parse(request.body);
    const auto result = body.at("result").get<std::string>();
    for (const auto& c : body.at("components")) {
      comps.emplace_back(c.at("key").get<std::string>(), c.at("value").get<std::string>());
    }
    if (result.size() != 16 || result.find_first_not_of("0123456789abcdef") != std::string::npos) {
      return plain(400, "result must be 16 lowercase hex digits\n");
    }
    hash = std::stoull(result, nullptr, 16);
  } catch (const json::exception& e) {
    return plain(400, std::string("malformed body: ") + e.what() + "\n");
  }
  // Only self-consistent fingerprints are stored.
  if (dispatch::fingerprint_hash(comps) != hash) return plain(400, "result does not match components\n");

  try {
    store_.append_fingerprint(hash, std::move(comps));
  } catch (const Error& e) {
    return plain(500, std::string(e.what()) + "\n");
  }
  return http::Response{204, {}, ""};
}

http::Response CollectorService::track(const http::Request& request) {
  const auto u = url::parse(request.url);
  std::optional<double> lat, lon;
  for (const auto& p : url::parse_query(u->query)) {
    if (p.name == "lat" && !lat) lat = parse_coordinate(p.value);
    if (p.name == "long" && !lon) lon = parse_coordinate(p.value);
  }
  std::optional<std::string> cookie;
  if (auto h = http::find_header(request.headers, "Cookie")) cookie = cookie_value(*h, kCookieName);

  LocationRecord rec;
  try {
    rec = store_.append_location(lat, lon, cookie);
  } catch (const Error& e) {
    return plain(500, std::string(e.what()) + "\n");
  }
  return http::Response{200,
                        {{"Content-Type", "text/html"},
                         {"Set-Cookie", std::string(kCookieName) + "=" + rec.cookie_id},
                         {std::string(kPageMarkerHeader), std::string(kPageMarkerValue)}},
                        fingerprint_page_html()};
}

}  // namespace nfctk::collector
