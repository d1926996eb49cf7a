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

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nfctk::http {

using Headers = std::vector<std::pair<std::string, std::string>>;

/// Case-insensitive lookup of the first header named `name`.
std::optional<std::string> find_header(const Headers& headers, std::string_view name);
std::vector<std::string> find_headers(const Headers& headers, std::string_view name);

struct Request {
  std::string method = "GET";
  std::string url;  // absolute: "http://host:port/path?query"
  Headers headers;
  std::string body;
};

struct Response {
  int status = 200;
  Headers headers;
  std::string body;
};

/// Something that answers requests: the collector, or a test double.
class Handler {
 public:
  virtual ~Handler() = default;
  virtual Response handle(const Request& request) = 0;
};

/// The victim browser's network stack. nullopt means the host could not be
/// reached.
class Client {
 public:
  virtual ~Client() = default;
  virtual std::optional<Response> send(const Request& request) = 0;
};

/// Offline web: every host other than the collector answers an empty 200 so
/// crafted URLs are never sent to real services.
Response offline_web_response();

/// In-process transport. Requests whose host:port equals `collector_address`
/// go straight to `collector`; everything else gets offline_web_response().
class LoopbackClient final : public Client {
 public:
  LoopbackClient(Handler& collector, std::string collector_address);
  std::optional<Response> send(const Request& request) override;

 private:
  Handler& collector_;
  std::string address_;
};

/// Real HTTP/1.1 to a collector listening on `collector_address`. Other hosts
/// are still served by the offline web.
class NetworkClient final : public Client {
 public:
  explicit NetworkClient(std::string collector_address,
                         std::chrono::milliseconds timeout = std::chrono::milliseconds(2000));
  std::optional<Response> send(const Request& request) override;

 private:
  std::string address_;
  std::chrono::milliseconds timeout_;
};

/// "host:port" -> (host, port). Returns nullopt if the port is missing or bad.
std::optional<std::pair<std::string, int>> split_address(std::string_view address);

}  // namespace nfctk::http
