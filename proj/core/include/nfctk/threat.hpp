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

// Static tag-content classifier.
//
// Severity ladder per detector:
//   CsrfAction      Critical (money movement) / High (social action)
//   GeoLeak         High
//   UriSpoofing     High (Info when the URL cannot be parsed)
//   AutoActionUri   High tel/sms, Medium intent/market/geo, Low mailto
//   ContactInjection, FingerprintRisk  Medium
//   MalformedRecord Info

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfctk/ndef.hpp"

namespace nfctk::threat {

enum class ThreatClass {
  UriSpoofing,
  AutoActionUri,
  GeoLeak,
  CsrfAction,
  ContactInjection,
  FingerprintRisk,
  MalformedRecord,
};

enum class Severity { Info = 0, Low = 1, Medium = 2, High = 3, Critical = 4 };

std::string_view class_name(ThreatClass c);
std::string_view severity_name(Severity s);
std::optional<Severity> parse_severity(std::string_view s);

struct Finding {
  ThreatClass threat_class;
  Severity severity;
  std::string evidence;  // verbatim substring of the analyzed text
  std::string detail;
  std::optional<std::size_t> record_index;  // nullopt for page-body findings

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// State-changing URL: path contains `path_contains` (case-insensitive) and
/// the query carries every parameter in `required_params`.
struct CsrfPattern {
  std::string label;
  std::string path_contains;
  std::vector<std::string> required_params;
  Severity severity = Severity::High;
};

struct AnalyzerConfig {
  std::vector<std::string> trusted_domains;
  std::vector<CsrfPattern> csrf_patterns;
  std::vector<std::string> fingerprint_signatures;
  std::size_t edit_distance_threshold = 2;
  // Trusted domains shorter than this are skipped by the edit-distance test.
  std::size_t min_trusted_length = 5;
};

AnalyzerConfig default_config();

/// JSON config; absent keys keep their defaults. Throws Error(BadConfig) on
/// malformed content or thresholds < 1, Error(IoError) if unreadable.
AnalyzerConfig load_config_file(const std::filesystem::path& path);
AnalyzerConfig parse_config(std::string_view json_text);

struct ThreatReport {
  std::vector<Finding> findings;

  std::optional<Severity> max_severity() const;
  /// 0 no findings, 1 nothing above Medium, 2 anything High or Critical.
  int exit_code() const;
};

std::optional<Finding> detect_spoof(std::string_view url, const AnalyzerConfig& cfg);
std::optional<Finding> detect_auto_action(std::string_view uri);
std::optional<Finding> detect_geo_leak(std::string_view url);
std::optional<Finding> detect_csrf(std::string_view url, const AnalyzerConfig& cfg);
std::optional<Finding> detect_fingerprint_script(std::string_view page_body, const AnalyzerConfig& cfg);

/// All detectors over one URI, in detector order.
std::vector<Finding> analyze_uri(std::string_view uri, const AnalyzerConfig& cfg);

/// Every record is analyzed; the optional page body is what the tag's URL
/// serves. Findings are ordered by severity (descending), then record index.
ThreatReport analyze_message(const ndef::NdefMessage& msg, const AnalyzerConfig& cfg,
                             std::optional<std::string_view> page_body = std::nullopt);

/// Text the findings of record `index` quote from: the decoded URI, the vCard
/// text, or the decoded text-record body.
std::string analyzed_text(const ndef::NdefRecord& rec);

std::string report_to_json(const ThreatReport& r, int indent = 2);

}  // namespace nfctk::threat
