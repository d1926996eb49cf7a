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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nfctk/device.hpp"

namespace nfctk::dispatch {

using Component = std::pair<std::string, std::string>;
using Components = std::vector<Component>;

std::uint64_t fnv1a64(std::string_view data);

/// "k1=v1;k2=v2;...;" -- the exact bytes that get hashed.
std::string canonical_string(std::span<const Component> components);

std::uint64_t fingerprint_hash(std::span<const Component> components);

/// 16 lowercase hex digits.
std::string hash_hex(std::uint64_t hash);

struct Fingerprint {
  Components components;  // os, stock, browser, screen, timezone, language, cores
  std::uint64_t hash = 0;
};

/// Deterministic stand-in for what a fingerprinting script collects.
Fingerprint fingerprint_device(const DeviceProfile& device);

}  // namespace nfctk::dispatch
