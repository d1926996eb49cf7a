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

#include <fstream>
#include <iterator>
#include <json.hpp>

#include "nfctk/error.hpp"
#include "nfctk/threat.hpp"

namespace nfctk::threat {

AnalyzerConfig default_config() {
  AnalyzerConfig cfg;
  cfg.trusted_domains = {"google.com",   "facebook.com", "twitter.com",   "paypal.com",    "banksite.com",
                         "example.com",  "wikipedia.org", "github.com",   "android.com",   "youtube.com",
                         "amazon.com",   "apple.com",    "microsoft.com", "linkedin.com",  "instagram.com"};
  cfg.csrf_patterns = {
      {"money transfer", "transfer", {"account", "amount"}, Severity::Critical},
      {"social like", "og.likes", {}, Severity::High},
      {"social follow", "intent/follow", {"user_id"}, Severity::High},
  };
  cfg.fingerprint_signatures = {"fingerprint2", "Fingerprint2().get", "collectFingerprint"};
  return cfg;
}

AnalyzerConfig parse_config(std::string_view json_text) {
  using nlohmann::json;
  AnalyzerConfig cfg = default_config();
  try {
    const auto j = json::parse(json_text);
    if (j.contains("trusted_domains")) cfg.trusted_domains = j.at("trusted_domains").get<std::vector<std::string>>();
    if (j.contains("fingerprint_signatures")) {
      cfg.fingerprint_signatures = j.at("fingerprint_signatures").get<std::vector<std::string>>();
    }
    if (j.contains("csrf_patterns")) {
      cfg.csrf_patterns.clear();
      for (const auto& p : j.at("csrf_patterns")) {
        CsrfPattern pat;
        pat.path_contains = p.at("path").get<std::string>();
        pat.label = p.value("label", pat.path_contains);
        pat.required_params = p.value("params", std::vector<std::string>{});
        const auto sev = p.value("severity", std::string("High"));
        const auto parsed = parse_severity(sev);
        if (!parsed) throw Error(Errc::BadConfig, "unknown severity '" + sev + "'");
        pat.severity = *parsed;
        cfg.csrf_patterns.push_back(std::move(pat));
      }
    }
    if (j.contains("edit_distance_threshold")) {
      const auto v = j.at("edit_distance_threshold").get<long long>();
      if (v < 1) throw Error(Errc::BadConfig, "edit_distance_threshold must be >= 1");
      cfg.edit_distance_threshold = static_cast<std::size_t>(v);
    }
    if (j.contains("min_trusted_length")) {
      const auto v = j.at("min_trusted_length").get<long long>();
      if (v < 1) throw Error(Errc::BadConfig, "min_trusted_length must be >= 1");
      cfg.min_trusted_length = static_cast<std::size_t>(v);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::BadConfig, std::string("analyzer config: ") + e.what());
  }
  return cfg;
}

AnalyzerConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

}  // namespace nfctk::threat
