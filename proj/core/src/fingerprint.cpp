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

#include "nfctk/fingerprint.hpp"

#include <cstdio>

namespace nfctk::dispatch {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string canonical_string(std::span<const Component> components) {
  std::string out;
  for (const auto& [k, v] : components) {
    out += k;
    out += '=';
    out += v;
    out += ';';
  }
  return out;
}

std::uint64_t fingerprint_hash(std::span<const Component> components) {
  return fnv1a64(canonical_string(components));
}

std::string hash_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Fingerprint fingerprint_device(const DeviceProfile& device) {
  Fingerprint fp;
  fp.components = {
      {"os", device.os_version},
      {"stock", device.stock},
      {"browser", device.browser},
      {"screen", device.screen},
      {"timezone", device.timezone},
      {"language", device.language},
      {"cores", std::to_string(device.cpu_cores)},
  };
  fp.hash = fingerprint_hash(fp.components);
  return fp;
}

}  // namespace nfctk::dispatch
