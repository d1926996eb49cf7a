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

// Attacker-side collector: receives fingerprint posts and location beacons,
// hands out the tracking cookie, and keeps an append-only record log.

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfctk/fingerprint.hpp"
#include "nfctk/http.hpp"

namespace nfctk::collector {

inline constexpr int kDefaultPort = 8882;
inline constexpr std::string_view kCookieName = "TestCookie";
inline constexpr std::string_view kCollectPath = "/collectFingerprint";
inline constexpr std::string_view kTrackPath = "/track";
inline constexpr std::string_view kRecordsPath = "/records";
/// Response header telling the victim browser it loaded the fingerprint page.
inline constexpr std::string_view kPageMarkerHeader = "X-Nfctk-Page";
inline constexpr std::string_view kPageMarkerValue = "fingerprint";

struct FingerprintRecord {
  std::uint64_t hash = 0;
  dispatch::Components components;
  std::uint64_t received_at = 0;

  friend bool operator==(const FingerprintRecord&, const FingerprintRecord&) = default;
};

struct LocationRecord {
  std::optional<double> lat;
  std::optional<double> lon;
  std::string cookie_id;
  std::uint64_t received_at = 0;
  bool partial = false;       // lat or long missing / unparsable
  bool out_of_range = false;  // outside [-90,90] x [-180,180]

  friend bool operator==(const LocationRecord&, const LocationRecord&) = default;
};

struct Snapshot {
  std::vector<FingerprintRecord> fingerprints;
  std::vector<LocationRecord> locations;

  std::size_t size() const { return fingerprints.size() + locations.size(); }
  /// Records with received_at greater than every record in `before`.
  Snapshot since(const Snapshot& before) const;
  std::uint64_t last_sequence() const;
};

std::string snapshot_to_json(const Snapshot& s, int indent = -1);
/// Throws Error(BadConfig) on malformed input.
Snapshot snapshot_from_json(std::string_view text);

/// "c" followed by the zero-padded sequence number of the first visit.
std::string make_cookie_id(std::uint64_t sequence);

/// Thread-safe append-only store. Sequence numbers are shared by both record
/// kinds and strictly increase. With a persistence path, each record is
/// appended to the file as one JSON line and existing lines are reloaded on
/// construction.
class RecordStore {
 public:
  RecordStore() = default;
  explicit RecordStore(std::filesystem::path persist_path, bool fsync_each_append = false);

  RecordStore(const RecordStore&) = delete;
  RecordStore& operator=(const RecordStore&) = delete;

  FingerprintRecord append_fingerprint(std::uint64_t hash, dispatch::Components components);

  /// `cookie` is the visitor's existing TestCookie; a new visitor gets one
  /// derived from this record's sequence number.
  LocationRecord append_location(std::optional<double> lat, std::optional<double> lon,
                                 std::optional<std::string> cookie);

  Snapshot snapshot() const;

 private:
  void persist(const std::string& line);

  mutable std::mutex mu_;
  Snapshot records_;
  std::uint64_t next_seq_ = 1;
  std::optional<std::filesystem::path> path_;
  bool fsync_ = false;
};

/// HTTP routes of the collector, independent of any socket library:
///
///   POST /collectFingerprint   JSON {result, components:[{key,value}]} -> 204
///   GET  /track?lat=&long=     location beacon, Set-Cookie TestCookie -> 200
///   GET  /                     same as /track
///   GET  /records              store snapshot as JSON
class CollectorService final : public http::Handler {
 public:
  explicit CollectorService(RecordStore& store) : store_(store) {}

  http::Response handle(const http::Request& request) override;

  RecordStore& store() { return store_; }

 private:
  http::Response collect(const http::Request& request);
  http::Response track(const http::Request& request);

  RecordStore& store_;
};

/// The page served on /track: a fingerprinting page that posts to the
/// collector and then redirects away.
std::string fingerprint_page_html();

/// Cookie value for `name` in a Cookie request header.
std::optional<std::string> cookie_value(std::string_view cookie_header, std::string_view name);

}  // namespace nfctk::collector
