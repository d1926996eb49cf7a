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

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <json.hpp>

#include "nfctk/collector.hpp"
#include "nfctk/error.hpp"

namespace nfctk::collector {

using nlohmann::json;

namespace {

json components_json(const dispatch::Components& comps) {
  json arr = json::array();
  for (const auto& [k, v] : comps) arr.push_back({{"key", k}, {"value", v}});
  return arr;
}

dispatch::Components components_from(const json& arr) {
  dispatch::Components out;
  for (const auto& c : arr) out.emplace_back(c.at("key").get<std::string>(), c.at("value").get<std::string>());
  return out;
}

json opt_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> number_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json to_json(const FingerprintRecord& r) {
  return {{"kind", "fingerprint"},
          {"seq", r.received_at},
          {"hash", dispatch::hash_hex(r.hash)},
          {"components", components_json(r.components)}};
}

json to_json(const LocationRecord& r) {
  return {{"kind", "location"},     {"seq", r.received_at},   {"lat", opt_number(r.lat)},
          {"long", opt_number(r.lon)}, {"cookie_id", r.cookie_id}, {"partial", r.partial},
          {"out_of_range", r.out_of_range}};
}

std::uint64_t parse_hash(const std::string& hex) {
  if (hex.size() != 16) throw Error(Errc::BadConfig, "fingerprint hash must be 16 hex digits");
  std::uint64_t v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw Error(Errc::BadConfig, "fingerprint hash must be hex");
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

FingerprintRecord fingerprint_from(const json& j) {
  return FingerprintRecord{parse_hash(j.at("hash").get<std::string>()), components_from(j.at("components")),
                           j.at("seq").get<std::uint64_t>()};
}

LocationRecord location_from(const json& j) {
  LocationRecord r;
  r.lat = number_from(j.at("lat"));
  r.lon = number_from(j.at("long"));
  r.cookie_id = j.at("cookie_id").get<std::string>();
  r.received_at = j.at("seq").get<std::uint64_t>();
  r.partial = j.value("partial", false);
  r.out_of_range = j.value("out_of_range", false);
  return r;
}

bool in_range(const std::optional<double>& lat, const std::optional<double>& lon) {
  return (!lat || (*lat >= -90.0 && *lat <= 90.0)) && (!lon || (*lon >= -180.0 && *lon <= 180.0));
}

}  // namespace

std::string make_cookie_id(std::uint64_t sequence) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "c%06llu", static_cast<unsigned long long>(sequence));
  return buf;
}

std::uint64_t Snapshot::last_sequence() const {
  std::uint64_t m = 0;
  for (const auto& f : fingerprints) m = std::max(m, f.received_at);
  for (const auto& l : locations) m = std::max(m, l.received_at);
  return m;
}

Snapshot Snapshot::since(const Snapshot& before) const {
  const auto cut = before.last_sequence();
  Snapshot out;
  for (const auto& f : fingerprints) {
    if (f.received_at > cut) out.fingerprints.push_back(f);
  }
  for (const auto& l : locations) {
    if (l.received_at > cut) out.locations.push_back(l);
  }
  return out;
}

std::string snapshot_to_json(const Snapshot& s, int indent) {
  json fps = json::array(), locs = json::array();
  for (const auto& f : s.fingerprints) fps.push_back(to_json(f));
  for (const auto& l : s.locations) locs.push_back(to_json(l));
  return json{{"fingerprints", fps}, {"locations", locs}}.dump(indent);
}

Snapshot snapshot_from_json(std::string_view text) {
  try {
    const auto j = json::parse(text);
    Snapshot s;
    for (const auto& f : j.at("fingerprints")) s.fingerprints.push_back(fingerprint_from(f));
    for (const auto& l : j.at("locations")) s.locations.push_back(location_from(l));
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::BadConfig, std::string("record snapshot: ") + e.what());
  }
}

RecordStore::RecordStore(std::filesystem::path persist_path, bool fsync_each_append)
    : path_(std::move(persist_path)), fsync_(fsync_each_append) {
  std::ifstream in(*path_);
  if (!in) return;  // fresh store
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const auto j = json::parse(line);
      const auto kind = j.at("kind").get<std::string>();
      if (kind == "fingerprint") {
        records_.fingerprints.push_back(fingerprint_from(j));
      } else if (kind == "location") {
        records_.locations.push_back(location_from(j));
      } else {
        throw Error(Errc::BadConfig, "unknown record kind '" + kind + "'");
      }
    } catch (const json::exception& e) {
      throw Error(Errc::BadConfig, path_->string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  next_seq_ = records_.last_sequence() + 1;
}

void RecordStore::persist(const std::string& line) {
  if (!path_) return;
  const int fd = ::open(path_->c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw Error(Errc::IoError, "open " + path_->string() + ": " + std::strerror(errno));
  const std::string data = line + "\n";
  std::size_t off = 0;
  while (off < data.size()) {
    const auto n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      throw Error(Errc::IoError, "write " + path_->string() + ": " + std::strerror(err));
    }
    off += static_cast<std::size_t>(n);
  }
  if (fsync_ && ::fsync(fd) != 0) {
    const int err = errno;
    ::close(fd);
    throw Error(Errc::IoError, "fsync " + path_->string() + ": " + std::strerror(err));
  }
  ::close(fd);
}

FingerprintRecord RecordStore::append_fingerprint(std::uint64_t hash, dispatch::Components components) {
  std::lock_guard lock(mu_);
  FingerprintRecord r{hash, std::move(components), next_seq_};
  persist(to_json(r).dump());
  ++next_seq_;
  records_.fingerprints.push_back(r);
  return r;
}

LocationRecord RecordStore::append_location(std::optional<double> lat, std::optional<double> lon,
                                            std::optional<std::string> cookie) {
  std::lock_guard lock(mu_);
  LocationRecord r;
  r.lat = lat;
  r.lon = lon;
  r.received_at = next_seq_;
  r.cookie_id = cookie ? std::move(*cookie) : make_cookie_id(next_seq_);
  r.partial = !lat || !lon;
  r.out_of_range = !in_range(lat, lon);
  persist(to_json(r).dump());
  ++next_seq_;
  records_.locations.push_back(r);
  return r;
}

Snapshot RecordStore::snapshot() const {
  std::lock_guard lock(mu_);
  return records_;
}

}  // namespace nfctk::collector
