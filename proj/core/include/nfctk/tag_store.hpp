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

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nfctk/ndef.hpp"

namespace nfctk::tags {

using Uid = std::array<std::uint8_t, 7>;
using Digest = std::array<std::uint8_t, 32>;

inline constexpr std::size_t kMaxCapacity = 8192;

Digest sha256(std::span<const std::uint8_t> data);

/// First 7 bytes of SHA-256 over the big-endian seed.
Uid derive_uid(std::uint64_t seed);

/// SHA-256(uid || content).
Digest content_hash(const Uid& uid, std::span<const std::uint8_t> content);

/// A passive tag as the attacker and the victim device see it. Values are
/// immutable; every mutation returns a new TagImage.
class TagImage {
 public:
  TagImage(Uid uid, std::size_t capacity_bytes, bool locked, ndef::NdefMessage message);

  const Uid& uid() const noexcept { return uid_; }
  std::size_t capacity_bytes() const noexcept { return capacity_; }
  bool locked() const noexcept { return locked_; }
  const ndef::NdefMessage& message() const noexcept { return message_; }
  Bytes bytes() const { return ndef::serialize_message(message_); }

  friend bool operator==(const TagImage&, const TagImage&) = default;

 private:
  Uid uid_;
  std::size_t capacity_;
  bool locked_;
  ndef::NdefMessage message_;
};

struct TagBaseline {
  Uid uid;
  Digest digest;

  friend bool operator==(const TagBaseline&, const TagBaseline&) = default;
};

/// Throws InvalidCapacity (0 or > 8192) or CapacityExceeded.
TagImage create_tag(std::size_t capacity_bytes, ndef::NdefMessage message, std::uint64_t seed);

/// Overwrite attack. Throws TagLocked or CapacityExceeded.
TagImage write_tag(const TagImage& tag, ndef::NdefMessage message);

TagImage lock_tag(const TagImage& tag);

/// Physical substitution: a fresh attacker tag with a seed-derived UID. The
/// original's lock state is irrelevant. Capacity matches the original unless
/// the attacker message needs more room.
TagImage replace_tag(const TagImage& original, ndef::NdefMessage attacker_message, std::uint64_t seed);

TagBaseline register_baseline(const TagImage& tag);
bool verify_tag(const TagImage& tag, const TagBaseline& baseline);
/// Same check over raw tag bytes, for content that may not even parse.
bool verify_content(const Uid& uid, std::span<const std::uint8_t> content, const TagBaseline& baseline);

// Dumps ---------------------------------------------------------------------

enum class DumpFormat { Binary, Hex };

void save_dump(const TagImage& tag, const std::filesystem::path& path, DumpFormat fmt = DumpFormat::Binary);
Bytes read_dump_bytes(const std::filesystem::path& path, DumpFormat fmt = DumpFormat::Binary);
/// uid and capacity are not stored in the dump and must be supplied.
TagImage load_dump(const std::filesystem::path& path, std::size_t capacity_bytes, const Uid& uid,
                   DumpFormat fmt = DumpFormat::Binary);

// Baseline files: one "<uid-hex> <digest-hex>" line per tag.
void save_baselines(const std::vector<TagBaseline>& baselines, const std::filesystem::path& path);
std::vector<TagBaseline> load_baselines(const std::filesystem::path& path);

std::string format_baseline(const TagBaseline& b);
TagBaseline parse_baseline(std::string_view line);

}  // namespace nfctk::tags
