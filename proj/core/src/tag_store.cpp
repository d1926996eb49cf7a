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

#include "nfctk/tag_store.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

#include "nfctk/error.hpp"

namespace nfctk::tags {

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("EVP sha256 init failed");
    }
  }
  void update(std::span<const std::uint8_t> data) {
    if (EVP_DigestUpdate(ctx_.get(), data.data(), data.size()) != 1) {
      throw std::runtime_error("EVP sha256 update failed");
    }
  }
  Digest finish() {
    Digest out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), out.data(), &len) != 1 || len != out.size()) {
      throw std::runtime_error("EVP sha256 final failed");
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx_;
};

void check_fits(std::size_t capacity, const ndef::NdefMessage& message) {
  const auto need = ndef::serialized_size(message);
  if (need > capacity) {
    throw Error(Errc::CapacityExceeded,
                std::to_string(need) + " bytes do not fit a " + std::to_string(capacity) + "-byte tag");
  }
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(std::string_view hex, const char* what) {
  auto bytes = from_hex(hex);
  if (bytes.size() != N) throw Error(Errc::BadConfig, std::string("wrong length for ") + what);
  std::array<std::uint8_t, N> out{};
  std::copy(bytes.begin(), bytes.end(), out.begin());
  return out;
}

}  // namespace

Digest sha256(std::span<const std::uint8_t> data) {
  Sha256 h;
  h.update(data);
  return h.finish();
}

Uid derive_uid(std::uint64_t seed) {
  std::array<std::uint8_t, 8> be{};
  for (int i = 7; i >= 0; --i) {
    be[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seed & 0xff);
    seed >>= 8;
  }
  const auto d = sha256(be);
  Uid uid{};
  std::copy_n(d.begin(), uid.size(), uid.begin());
  return uid;
}

Digest content_hash(const Uid& uid, std::span<const std::uint8_t> content) {
  Sha256 h;
  h.update(uid);
  h.update(content);
  return h.finish();
}

TagImage::TagImage(Uid uid, std::size_t capacity_bytes, bool locked, ndef::NdefMessage message)
    : uid_(uid), capacity_(capacity_bytes), locked_(locked), message_(std::move(message)) {
  if (capacity_ == 0 || capacity_ > kMaxCapacity) {
    throw Error(Errc::InvalidCapacity, "capacity must be in 1.." + std::to_string(kMaxCapacity));
  }
  check_fits(capacity_, message_);
}

TagImage create_tag(std::size_t capacity_bytes, ndef::NdefMessage message, std::uint64_t seed) {
  return TagImage(derive_uid(seed), capacity_bytes, false, std::move(message));
}

TagImage write_tag(const TagImage& tag, ndef::NdefMessage message) {
  if (tag.locked()) throw Error(Errc::TagLocked, "tag " + to_hex(tag.uid()) + " is read-only");
  return TagImage(tag.uid(), tag.capacity_bytes(), false, std::move(message));
}

TagImage lock_tag(const TagImage& tag) {
  return TagImage(tag.uid(), tag.capacity_bytes(), true, tag.message());
}

TagImage replace_tag(const TagImage& original, ndef::NdefMessage attacker_message, std::uint64_t seed) {
  const auto capacity = std::max(original.capacity_bytes(), ndef::serialized_size(attacker_message));
  return TagImage(derive_uid(seed), capacity, false, std::move(attacker_message));
}

TagBaseline register_baseline(const TagImage& tag) {
  return TagBaseline{tag.uid(), content_hash(tag.uid(), tag.bytes())};
}

bool verify_content(const Uid& uid, std::span<const std::uint8_t> content, const TagBaseline& baseline) {
  return uid == baseline.uid && content_hash(uid, content) == baseline.digest;
}

bool verify_tag(const TagImage& tag, const TagBaseline& baseline) {
  return verify_content(tag.uid(), tag.bytes(), baseline);
}

void save_dump(const TagImage& tag, const std::filesystem::path& path, DumpFormat fmt) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  const auto bytes = tag.bytes();
  if (fmt == DumpFormat::Hex) {
    out << to_hex(bytes) << '\n';
  } else {
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  }
  if (!out.flush()) throw Error(Errc::IoError, "write failed for " + path.string());
}

Bytes read_dump_bytes(const std::filesystem::path& path, DumpFormat fmt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::IoError, "read failed for " + path.string());
  if (fmt == DumpFormat::Hex) return from_hex(raw);
  return to_bytes(raw);
}

TagImage load_dump(const std::filesystem::path& path, std::size_t capacity_bytes, const Uid& uid,
                   DumpFormat fmt) {
  return TagImage(uid, capacity_bytes, false, ndef::parse_message(read_dump_bytes(path, fmt)));
}

std::string format_baseline(const TagBaseline& b) { return to_hex(b.uid) + " " + to_hex(b.digest); }

TagBaseline parse_baseline(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string uid_hex, digest_hex, extra;
  if (!(in >> uid_hex >> digest_hex) || (in >> extra)) {
    throw Error(Errc::BadConfig, "baseline line must be '<uid-hex> <digest-hex>'");
  }
  return TagBaseline{fixed_from_hex<7>(uid_hex, "uid"), fixed_from_hex<32>(digest_hex, "digest")};
}

void save_baselines(const std::vector<TagBaseline>& baselines, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path.string() + " for writing");
  for (const auto& b : baselines) out << format_baseline(b) << '\n';
  if (!out.flush()) throw Error(Errc::IoError, "write failed for " + path.string());
}

std::vector<TagBaseline> load_baselines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::vector<TagBaseline> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_baseline(line));
  }
  return out;
}

}  // namespace nfctk::tags
