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

#include "nfctk/http.hpp"

#include <httplib.h>

#include <charconv>

#include "nfctk/url.hpp"

namespace nfctk::http {

namespace {
bool iequals(std::string_view a, std::string_view b) {
  return url::to_lower(a) == url::to_lower(b);
}

bool targets(const url::Url& u, std::string_view address) {
  return u.has_authority && u.host_port() == url::to_lower(address);
}
}  // namespace

std::optional<std::string> find_header(const Headers& headers, std::string_view name) {
  for (const auto& [k, v] : headers) {
    if (iequals(k, name)) return v;
  }
  return std::nullopt;
}

std::vector<std::string> find_headers(const Headers& headers, std::string_view name) {
  std::vector<std::string> out;
  for (const auto& [k, v] : headers) {
    if (iequals(k, name)) out.push_back(v);
  }
  return out;
}

Response offline_web_response() { return Response{200, {{"Content-Type", "text/html"}}, ""}; }

std::optional<std::pair<std::string, int>> split_address(std::string_view address) {
  const auto colon = address.rfind(':');
  if (colon == std::string_view::npos || colon == 0) return std::nullopt;
  int port = 0;
  const auto p = address.substr(colon + 1);
  auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), port);
  if (ec != std::errc() || end != p.data() + p.size() || port < 0 || port > 65535) return std::nullopt;
  return std::make_pair(std::string(address.substr(0, colon)), port);
}

LoopbackClient::LoopbackClient(Handler& collector, std::string collector_address)
    : collector_(collector), address_(std::move(collector_address)) {}

std::optional<Response> LoopbackClient::send(const Request& request) {
  const auto u = url::parse(request.url);
  if (!u) return std::nullopt;
  if (!targets(*u, address_)) return offline_web_response();
  return collector_.handle(request);
}

NetworkClient::NetworkClient(std::string collector_address, std::chrono::milliseconds timeout)
    : address_(std::move(collector_address)), timeout_(timeout) {}

std::optional<Response> NetworkClient::send(const Request& request) {
  const auto u = url::parse(request.url);
  if (!u) return std::nullopt;
  if (!targets(*u, address_)) return offline_web_response();
  const auto hp = split_address(address_);
  if (!hp) return std::nullopt;

  httplib::Client cli(hp->first, hp->second);
  cli.set_connection_timeout(timeout_);
  cli.set_read_timeout(timeout_);
  cli.set_write_timeout(timeout_);

  httplib::Headers headers;
  std::string content_type = "application/octet-stream";
  for (const auto& [k, v] : request.headers) {
    if (iequals(k, "Content-Type")) {
      content_type = v;
    } else {
      headers.emplace(k, v);
    }
  }
  std::string target(u->path.empty() ? "/" : u->path);
  if (!u->query.empty()) target += "?" + std::string(u->query);

  httplib::Result res = request.method == "POST"
                            ? cli.Post(target, headers, request.body, content_type)
                            : cli.Get(target, headers);
  if (!res) return std::nullopt;

  Response out;
  out.status = res->status;
  out.body = res->body;
  for (const auto& [k, v] : res->headers) out.headers.emplace_back(k, v);
  return out;
}

}  // namespace nfctk::http
