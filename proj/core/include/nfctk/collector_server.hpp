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

#include <memory>
#include <string>

#include "nfctk/collector.hpp"

namespace nfctk::collector {

/// HTTP/1.1 front end for a CollectorService. Port 0 binds an ephemeral port.
class CollectorServer {
 public:
  CollectorServer(CollectorService& service, std::string host = "127.0.0.1", int port = kDefaultPort);
  ~CollectorServer();

  CollectorServer(const CollectorServer&) = delete;
  CollectorServer& operator=(const CollectorServer&) = delete;

  /// Binds and serves on a background thread. Throws Error(IoError) if the
  /// address cannot be bound.
  void start();
  /// Binds and serves on the calling thread until stop() is called.
  void run();
  void stop();

  int port() const noexcept { return port_; }
  std::string address() const { return host_ + ":" + std::to_string(port_); }

 private:
  struct Impl;
  void bind();

  std::unique_ptr<Impl> impl_;
  std::string host_;
  int port_;
};

}  // namespace nfctk::collector
