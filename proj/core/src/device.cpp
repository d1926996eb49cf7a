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

#include "nfctk/device.hpp"

namespace nfctk::dispatch {

const std::vector<DevicePreset>& device_presets() {
  static const std::vector<DevicePreset> kPresets = {
      {"oneplus-3t",
       {"One Plus 3T", "Android 7.1.1", "Stock", "Chrome", "1080x1920", "Asia/Hong_Kong", "en-US", 4}},
      {"xiaomi-mi3w-miui7",
       {"Xiaomi Mi3W", "Android 5.1", "MIUI 7", "Chrome", "1080x1920", "Asia/Hong_Kong", "en-US", 4}},
      {"xiaomi-mi3w-miui8",
       {"Xiaomi Mi3W", "Android 6.0.1", "MIUI 8", "Chrome", "1080x1920", "Asia/Hong_Kong", "en-US", 4}},
      {"samsung-c7",
       {"Samsung C7", "Android 6.0.1", "Touchwiz", "Chrome", "1080x1920", "Asia/Hong_Kong", "en-US", 8}},
  };
  return kPresets;
}

std::optional<DeviceProfile> find_preset(std::string_view key) {
  for (const auto& p : device_presets()) {
    if (p.key == key) return p.profile;
  }
  return std::nullopt;
}

}  // namespace nfctk::dispatch
