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

// NDEF message codec.
//
// Record layout on the wire:
//
//   +----+----+----+----+----+-----------+
//   | MB | ME | CF | SR | IL |   TNF(3)  |   header byte
//   +----+----+----+----+----+-----------+
//   | TYPE LENGTH (1)                    |
//   | PAYLOAD LENGTH (1 if SR, else 4 BE)|
//   | ID LENGTH (1, only if IL)          |
//   | TYPE | ID | PAYLOAD                |
//   +------------------------------------+
//
// Chunked records (CF) are rejected.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nfctk/hex.hpp"

namespace nfctk::ndef {

enum class Tnf : std::uint8_t {
  Empty = 0x00,
  WellKnown = 0x01,
  Mime = 0x02,
  AbsoluteUri = 0x03,
  External = 0x04,
  Unknown = 0x05,
  Unchanged = 0x06,
  Reserved = 0x07,
};

namespace flag {
inline constexpr std::uint8_t kMessageBegin = 0x80;
inline constexpr std::uint8_t kMessageEnd = 0x40;
inline constexpr std::uint8_t kChunk = 0x20;
inline constexpr std::uint8_t kShortRecord = 0x10;
inline constexpr std::uint8_t kIdLength = 0x08;
inline constexpr std::uint8_t kTnfMask = 0x07;
}  // namespace flag

inline constexpr std::string_view kUriType = "U";
inline constexpr std::string_view kTextType = "T";
inline constexpr std::string_view kVcardType = "text/vcard";

/// One NDEF record. Instances always satisfy the record invariants: an Empty
/// record carries no type, id or payload, and a well-known "U" record has a
/// payload whose first byte is a supported abbreviation code.
class NdefRecord {
 public:
  /// Throws Error(BadRecord) or Error(UnknownUriCode) on invariant violations.
  static NdefRecord make(Tnf tnf, Bytes type, std::optional<Bytes> id, Bytes payload);
  static NdefRecord make(Tnf tnf, std::string_view type, std::string_view payload);
  static NdefRecord empty();

  Tnf tnf() const noexcept { return tnf_; }
  const Bytes& type() const noexcept { return type_; }
  const std::optional<Bytes>& id() const noexcept { return id_; }
  const Bytes& payload() const noexcept { return payload_; }

  std::string type_string() const { return to_string(type_); }
  bool has_type(Tnf tnf, std::string_view type) const;
  bool is_uri() const { return has_type(Tnf::WellKnown, kUriType); }
  bool is_text() const { return has_type(Tnf::WellKnown, kTextType); }
  bool is_vcard() const;

  friend bool operator==(const NdefRecord&, const NdefRecord&) = default;

 private:
  NdefRecord() = default;
  Tnf tnf_ = Tnf::Empty;
  Bytes type_;
  std::optional<Bytes> id_;
  Bytes payload_;
};

/// A non-empty ordered list of records.
class NdefMessage {
 public:
  /// Throws Error(BadRecord) when `records` is empty.
  explicit NdefMessage(std::vector<NdefRecord> records);
  NdefMessage(std::initializer_list<NdefRecord> records)
      : NdefMessage(std::vector<NdefRecord>(records)) {}

  const std::vector<NdefRecord>& records() const noexcept { return records_; }
  const NdefRecord& first() const noexcept { return records_.front(); }
  std::size_t size() const noexcept { return records_.size(); }

  friend bool operator==(const NdefMessage&, const NdefMessage&) = default;

 private:
  std::vector<NdefRecord> records_;
};

/// Parses exactly one message. Throws Error with TruncatedMessage, BadFlags,
/// BadRecord, UnknownUriCode or TrailingBytes.
NdefMessage parse_message(std::span<const std::uint8_t> bytes);

/// Canonical encoding: short form whenever the payload fits in one byte.
Bytes serialize_message(const NdefMessage& msg);

/// Encoded size of a message without materializing it.
std::size_t serialized_size(const NdefMessage& msg);

// URI records -------------------------------------------------------------

inline constexpr std::uint8_t kMaxUriCode = 0x06;

/// Prefix for an abbreviation code, or nullopt for unsupported codes.
std::optional<std::string_view> uri_prefix(std::uint8_t code);

/// Greedy longest-prefix abbreviation. Well-known type "U".
NdefRecord build_uri_record(std::string_view uri);

/// Throws Error(NotAUriRecord) or Error(UnknownUriCode).
std::string decode_uri_record(const NdefRecord& rec);

// Text records ------------------------------------------------------------

/// Status byte is the language length (UTF-8 text, bit 7 clear).
/// Throws LangTooLong for >5 chars, InvalidLanguage for <2 chars or non-ASCII.
NdefRecord build_text_record(std::string_view lang, std::string_view text);

struct TextContent {
  std::string lang;
  std::string text;
};

/// Throws Error(BadRecord) if `rec` is not a well-formed text record.
TextContent decode_text_record(const NdefRecord& rec);

}  // namespace nfctk::ndef
