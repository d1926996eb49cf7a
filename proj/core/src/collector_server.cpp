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

#include "nfctk/collector_server.hpp"

#include <httplib.h>

#include <sys/socket.h>

#include <thread>

#include "nfctk/error.hpp"

namespace nfctk::collector {

struct CollectorServer::Impl {
  httplib::Server server;
  std::thread thread;
  bool bound = false;
};

namespace {

http::Request convert(const httplib::Request& req) {
  http::Request out;
  out.method = req.method;
  std::string host = req.get_header_value("Host");
  if (host.empty()) host = "localhost";
  out.url = "http://" + host + req.target;
  for (const auto& [k, v] : req.headers) out.headers.emplace_back(k, v);
  out.body = req.body;
  return out;
}

}  // namespace

CollectorServer::CollectorServer(CollectorService& service, std::string host, int port)
    : impl_(std::make_unique<Impl>()), host_(std::move(host)), port_(port) {
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    const auto out = service.handle(convert(req));
    res.status = out.status;
    std::string content_type = "text/plain";
    for (const auto& [k, v] : out.headers) {
      if (k == "Content-Type") {
        content_type = v;
      } else {
        res.set_header(k, v);
      }
    }
    if (!out.body.empty()) res.set_content(out.body, content_type);
  };
  // httplib also sets SO_REUSEPORT, which would let a second collector
  // silently share the port.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  });
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Delete(".*", handler);
}

CollectorServer::~CollectorServer() { stop(); }

void CollectorServer::bind() {
  if (impl_->bound) return;
  if (port_ == 0) {
    port_ = impl_->server.bind_to_any_port(host_);
    if (port_ < 0) throw Error(Errc::IoError, "cannot bind " + host_);
  } else if (!impl_->server.bind_to_port(host_, port_)) {
    throw Error(Errc::IoError, "cannot bind " + address());
  }
  impl_->bound = true;
}

void CollectorServer::start() {
  bind();
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void CollectorServer::run() {
  bind();
  impl_->server.listen_after_bind();
}

void CollectorServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace nfctk::collector
