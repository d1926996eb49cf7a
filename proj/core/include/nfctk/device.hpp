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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nfctk::dispatch {

/// The victim handset. Presets mirror the handsets the attacks were tried on;
/// they differ only in what a fingerprinting page can observe.
struct DeviceProfile {
  std::string name;
  std::string os_version;
  std::string stock;
  std::string browser;
  std::string screen;
  std::string timezone;
  std::string language;
  int cpu_cores = 0;
  bool unlocked = true;
  bool nfc_enabled = true;

  friend bool operator==(const DeviceProfile&, const DeviceProfile&) = default;
};

struct DevicePreset {
  std::string_view key;  // stable identifier used in scenario files and the CLI
  DeviceProfile profile;
};

const std::vector<DevicePreset>& device_presets();

/// Lookup by preset key ("oneplus-3t", "samsung-c7", ...).
std::optional<DeviceProfile> find_preset(std::string_view key);

}  // namespace nfctk::dispatch
