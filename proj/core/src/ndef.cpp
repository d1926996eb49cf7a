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

#include "nfctk/ndef.hpp"

#include <array>
#include <limits>

#include "nfctk/error.hpp"

namespace nfctk::ndef {

namespace {

constexpr std::array<std::string_view, kMaxUriCode + 1> kUriPrefixes = {
    "",         // 0x00
    "http://www.",   // 0x01
    "https://www.",  // 0x02
    "http://",       // 0x03
    "https://",      // 0x04
    "tel:",          // 0x05
    "mailto:",       // 0x06
};

void validate(Tnf tnf, const Bytes& type, const std::optional<Bytes>& id, const Bytes& payload) {
  if (static_cast<std::uint8_t>(tnf) > flag::kTnfMask) {
    throw Error(Errc::BadRecord, "TNF out of range");
  }
  if (type.size() > 0xff) throw Error(Errc::BadRecord, "type longer than 255 bytes");
  if (id && id->size() > 0xff) throw Error(Errc::BadRecord, "id longer than 255 bytes");
  if (payload.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::BadRecord, "payload longer than 2^32-1 bytes");
  }
  if (tnf == Tnf::Empty && (!type.empty() || id.has_value() || !payload.empty())) {
    throw Error(Errc::BadRecord, "empty record carries type, id or payload");
  }
  if (tnf == Tnf::WellKnown && type.size() == 1 && type[0] == 'U') {
    if (payload.empty()) throw Error(Errc::BadRecord, "URI record without abbreviation byte");
    if (payload[0] > kMaxUriCode) {
      throw Error(Errc::UnknownUriCode, "URI abbreviation code " + to_hex(std::span(payload).first(1)));
    }
  }
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  bool done() const { return pos_ == in_.size(); }

  std::uint8_t u8() {
    need(1);
    return in_[pos_++];
  }

  std::uint32_t u32be() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | in_[pos_++];
    return v;
  }

  Bytes take(std::size_t n) {
    need(n);
    Bytes out(in_.begin() + static_cast<std::ptrdiff_t>(pos_),
              in_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return out;
  }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) throw Error(Errc::TruncatedMessage, "input ends mid-record");
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

void append_record(Bytes& out, const NdefRecord& rec, bool first, bool last) {
  const bool short_form = rec.payload().size() <= 0xff;
  std::uint8_t header = static_cast<std::uint8_t>(rec.tnf());
  if (first) header |= flag::kMessageBegin;
  if (last) header |= flag::kMessageEnd;
  if (short_form) header |= flag::kShortRecord;
  if (rec.id()) header |= flag::kIdLength;

  out.push_back(header);
  out.push_back(static_cast<std::uint8_t>(rec.type().size()));
  const auto len = static_cast<std::uint32_t>(rec.payload().size());
  if (short_form) {
    out.push_back(static_cast<std::uint8_t>(len));
  } else {
    out.push_back(static_cast<std::uint8_t>(len >> 24));
    out.push_back(static_cast<std::uint8_t>(len >> 16));
    out.push_back(static_cast<std::uint8_t>(len >> 8));
    out.push_back(static_cast<std::uint8_t>(len));
  }
  if (rec.id()) out.push_back(static_cast<std::uint8_t>(rec.id()->size()));
  out.insert(out.end(), rec.type().begin(), rec.type().end());
  if (rec.id()) out.insert(out.end(), rec.id()->begin(), rec.id()->end());
  out.insert(out.end(), rec.payload().begin(), rec.payload().end());
}

}  // namespace

NdefRecord NdefRecord::make(Tnf tnf, Bytes type, std::optional<Bytes> id, Bytes payload) {
  validate(tnf, type, id, payload);
  NdefRecord rec;
  rec.tnf_ = tnf;
  rec.type_ = std::move(type);
  rec.id_ = std::move(id);
  rec.payload_ = std::move(payload);
  return rec;
}

NdefRecord NdefRecord::make(Tnf tnf, std::string_view type, std::string_view payload) {
  return make(tnf, to_bytes(type), std::nullopt, to_bytes(payload));
}

NdefRecord NdefRecord::empty() { return NdefRecord(); }

bool NdefRecord::has_type(Tnf tnf, std::string_view type) const {
  return tnf_ == tnf && std::string_view(reinterpret_cast<const char*>(type_.data()), type_.size()) == type;
}

bool NdefRecord::is_vcard() const {
  if (tnf_ != Tnf::Mime) return false;
  // MIME types compare case-insensitively.
  std::string t = type_string();
  if (t.size() != kVcardType.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != kVcardType[i]) return false;
  }
  return true;
}

NdefMessage::NdefMessage(std::vector<NdefRecord> records) : records_(std::move(records)) {
  if (records_.empty()) throw Error(Errc::BadRecord, "message needs at least one record");
}

NdefMessage parse_message(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw Error(Errc::TruncatedMessage, "no bytes");

  Reader in(bytes);
  std::vector<NdefRecord> records;
  bool ended = false;
  while (!ended) {
    if (in.done()) throw Error(Errc::TruncatedMessage, "missing message-end record");
    const std::uint8_t header = in.u8();
    const bool mb = header & flag::kMessageBegin;
    ended = header & flag::kMessageEnd;
    if (mb != records.empty()) {
      throw Error(Errc::BadFlags, records.empty() ? "first record lacks MB" : "MB set on inner record");
    }
    if (header & flag::kChunk) throw Error(Errc::BadFlags, "chunked records are not supported");

    const auto tnf = static_cast<Tnf>(header & flag::kTnfMask);
    const std::uint8_t type_len = in.u8();
    const std::uint32_t payload_len = (header & flag::kShortRecord) ? in.u8() : in.u32be();
    std::optional<std::uint8_t> id_len;
    if (header & flag::kIdLength) id_len = in.u8();

    Bytes type = in.take(type_len);
    std::optional<Bytes> id;
    if (id_len) id = in.take(*id_len);
    Bytes payload = in.take(payload_len);
    records.push_back(NdefRecord::make(tnf, std::move(type), std::move(id), std::move(payload)));
  }
  if (!in.done()) throw Error(Errc::TrailingBytes, "bytes after message-end record");
  return NdefMessage(std::move(records));
}

std::size_t serialized_size(const NdefMessage& msg) {
  std::size_t n = 0;
  for (const auto& rec : msg.records()) {
    n += 2 + (rec.payload().size() <= 0xff ? 1 : 4);
    if (rec.id()) n += 1 + rec.id()->size();
    n += rec.type().size() + rec.payload().size();
  }
  return n;
}

Bytes serialize_message(const NdefMessage& msg) {
  Bytes out;
  out.reserve(serialized_size(msg));
  const auto& recs = msg.records();
  for (std::size_t i = 0; i < recs.size(); ++i) {
    append_record(out, recs[i], i == 0, i + 1 == recs.size());
  }
  return out;
}

std::optional<std::string_view> uri_prefix(std::uint8_t code) {
  if (code > kMaxUriCode) return std::nullopt;
  return kUriPrefixes[code];
}

NdefRecord build_uri_record(std::string_view uri) {
  std::uint8_t best = 0;
  for (std::uint8_t code = 1; code <= kMaxUriCode; ++code) {
    const auto prefix = kUriPrefixes[code];
    if (uri.starts_with(prefix) && prefix.size() > kUriPrefixes[best].size()) best = code;
  }
  Bytes payload;
  payload.reserve(uri.size() + 1);
  payload.push_back(best);
  const auto rest = uri.substr(kUriPrefixes[best].size());
  payload.insert(payload.end(), rest.begin(), rest.end());
  return NdefRecord::make(Tnf::WellKnown, to_bytes(kUriType), std::nullopt, std::move(payload));
}

std::string decode_uri_record(const NdefRecord& rec) {
  if (!rec.is_uri()) throw Error(Errc::NotAUriRecord, "record is not a well-known URI record");
  // Construction already guarantees a supported code byte.
  const auto& p = rec.payload();
  std::string out(*uri_prefix(p[0]));
  out.append(p.begin() + 1, p.end());
  return out;
}

NdefRecord build_text_record(std::string_view lang, std::string_view text) {
  if (lang.size() > 5) throw Error(Errc::LangTooLong, "language code '" + std::string(lang) + "'");
  if (lang.size() < 2) throw Error(Errc::InvalidLanguage, "language code shorter than 2 chars");
  for (char c : lang) {
    if (static_cast<unsigned char>(c) > 0x7f || c <= 0x20) {
      throw Error(Errc::InvalidLanguage, "language code must be printable ASCII");
    }
  }
  Bytes payload;
  payload.reserve(1 + lang.size() + text.size());
  payload.push_back(static_cast<std::uint8_t>(lang.size()));
  payload.insert(payload.end(), lang.begin(), lang.end());
  payload.insert(payload.end(), text.begin(), text.end());
  return NdefRecord::make(Tnf::WellKnown, to_bytes(kTextType), std::nullopt, std::move(payload));
}

TextContent decode_text_record(const NdefRecord& rec) {
  if (!rec.is_text()) throw Error(Errc::BadRecord, "not a text record");
  const auto& p = rec.payload();
  if (p.empty()) throw Error(Errc::BadRecord, "text record without status byte");
  const std::size_t lang_len = p[0] & 0x3f;
  if (1 + lang_len > p.size()) throw Error(Errc::BadRecord, "language length exceeds payload");
  TextContent out;
  out.lang.assign(p.begin() + 1, p.begin() + 1 + static_cast<std::ptrdiff_t>(lang_len));
  out.text.assign(p.begin() + 1 + static_cast<std::ptrdiff_t>(lang_len), p.end());
  return out;
}

}  // namespace nfctk::ndef
