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

#include "nfctk/threat.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>

#include "nfctk/error.hpp"
#include "nfctk/homoglyph.hpp"
#include "nfctk/url.hpp"
#include "nfctk/vcard.hpp"

namespace nfctk::threat {

namespace {

Finding make(ThreatClass c, Severity s, std::string_view evidence, std::string detail) {
  return Finding{c, s, std::string(evidence), std::move(detail), std::nullopt};
}

bool icontains(std::string_view haystack, std::string_view needle) {
  return url::to_lower(haystack).find(url::to_lower(needle)) != std::string::npos;
}

bool is_trusted(const std::string& host, const std::vector<std::string>& trusted) {
  return std::any_of(trusted.begin(), trusted.end(), [&](const std::string& t) {
    const auto tl = url::to_lower(t);
    return host == tl || (host.size() > tl.size() && host.ends_with("." + tl));
  });
}

bool has_punycode_label(std::string_view host) {
  return host.starts_with("xn--") || host.find(".xn--") != std::string_view::npos;
}

}  // namespace

std::string_view class_name(ThreatClass c) {
  switch (c) {
    case ThreatClass::UriSpoofing: return "UriSpoofing";
    case ThreatClass::AutoActionUri: return "AutoActionUri";
    case ThreatClass::GeoLeak: return "GeoLeak";
    case ThreatClass::CsrfAction: return "CsrfAction";
    case ThreatClass::ContactInjection: return "ContactInjection";
    case ThreatClass::FingerprintRisk: return "FingerprintRisk";
    case ThreatClass::MalformedRecord: return "MalformedRecord";
  }
  return "Unknown";
}

std::string_view severity_name(Severity s) {
  switch (s) {
    case Severity::Info: return "Info";
    case Severity::Low: return "Low";
    case Severity::Medium: return "Medium";
    case Severity::High: return "High";
    case Severity::Critical: return "Critical";
  }
  return "Unknown";
}

std::optional<Severity> parse_severity(std::string_view s) {
  for (auto sev : {Severity::Info, Severity::Low, Severity::Medium, Severity::High, Severity::Critical}) {
    if (url::to_lower(severity_name(sev)) == url::to_lower(s)) return sev;
  }
  return std::nullopt;
}

std::optional<Severity> ThreatReport::max_severity() const {
  std::optional<Severity> m;
  for (const auto& f : findings) {
    if (!m || f.severity > *m) m = f.severity;
  }
  return m;
}

int ThreatReport::exit_code() const {
  const auto m = max_severity();
  if (!m) return 0;
  return *m >= Severity::High ? 2 : 1;
}

std::optional<Finding> detect_spoof(std::string_view text, const AnalyzerConfig& cfg) {
  const auto u = url::parse(text);
  if (!u) return make(ThreatClass::UriSpoofing, Severity::Info, text, "unparsable URL");
  if (!u->has_authority || url::is_ip_literal(u->host_lower)) return std::nullopt;
  if (is_trusted(u->host_lower, cfg.trusted_domains)) return std::nullopt;

  const auto decoded = decode_idn_host(u->host_lower);
  const auto reg = url::registrable_domain(decoded);
  const auto reg_skeleton = skeleton(reg);

  std::vector<std::string> reasons;
  if (has_punycode_label(u->host_lower)) reasons.push_back("punycode label (decodes to " + decoded + ")");
  for (const auto& t : cfg.trusted_domains) {
    const auto tl = url::to_lower(t);
    if (skeleton(tl) == reg_skeleton) {
      reasons.push_back("lookalike of " + tl);
      break;
    }
    if (tl.size() >= cfg.min_trusted_length) {
      const auto d = edit_distance(reg, tl);
      if (d > 0 && d <= cfg.edit_distance_threshold) {
        reasons.push_back("edit distance " + std::to_string(d) + " from " + tl);
        break;
      }
    }
  }
  if (reasons.empty()) return std::nullopt;

  std::string detail = "untrusted host " + u->host_lower + ": ";
  for (std::size_t i = 0; i < reasons.size(); ++i) detail += (i ? "; " : "") + reasons[i];
  return make(ThreatClass::UriSpoofing, Severity::High, u->host, detail);
}

std::optional<Finding> detect_auto_action(std::string_view uri) {
  const auto colon = uri.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto scheme = url::to_lower(uri.substr(0, colon));

  Severity sev;
  std::string what;
  if (scheme == "tel") {
    sev = Severity::High, what = "places a phone call";
  } else if (scheme == "sms" || scheme == "smsto") {
    sev = Severity::High, what = "composes a text message";
  } else if (scheme == "intent" || scheme == "market" || scheme == "geo") {
    sev = Severity::Medium, what = "launches an application (" + scheme + ")";
  } else if (scheme == "mailto") {
    sev = Severity::Low, what = "composes an email";
  } else {
    return std::nullopt;
  }
  return make(ThreatClass::AutoActionUri, sev, uri, "tag URI " + what + " without user intervention");
}

std::optional<Finding> detect_geo_leak(std::string_view text) {
  static constexpr std::array<std::string_view, 5> kNames = {"lat", "long", "lng", "latitude", "longitude"};
  const auto u = url::parse(text);
  if (!u || u->query.empty()) return std::nullopt;

  std::optional<std::size_t> begin, end;
  for (const auto& p : url::parse_query(u->query, u->query_offset)) {
    const auto name = url::to_lower(p.name);
    if (std::find(kNames.begin(), kNames.end(), name) == kNames.end()) continue;
    if (!begin) begin = p.begin;
    end = p.end;
  }
  if (!begin) return std::nullopt;
  return make(ThreatClass::GeoLeak, Severity::High, text.substr(*begin, *end - *begin),
              "URL embeds geo-coordinates; any visit reveals the reader's location");
}

std::optional<Finding> detect_csrf(std::string_view text, const AnalyzerConfig& cfg) {
  const auto u = url::parse(text);
  if (!u || !u->has_authority) return std::nullopt;
  const auto params = url::parse_query(u->query, u->query_offset);

  const CsrfPattern* best = nullptr;
  for (const auto& pat : cfg.csrf_patterns) {
    if (!icontains(u->path, pat.path_contains)) continue;
    const bool all = std::all_of(pat.required_params.begin(), pat.required_params.end(), [&](const std::string& rp) {
      return std::any_of(params.begin(), params.end(),
                         [&](const url::QueryParam& p) { return url::to_lower(p.name) == url::to_lower(rp); });
    });
    if (all && (!best || pat.severity > best->severity)) best = &pat;
  }
  if (!best) return std::nullopt;

  // Evidence: path through the end of the query.
  const auto from = static_cast<std::size_t>(u->path.data() - text.data());
  const auto to = u->query.empty() ? from + u->path.size() : u->query_offset + u->query.size();
  return make(ThreatClass::CsrfAction, best->severity, text.substr(from, to - from),
              "state-changing request (" + best->label + ") rides the victim's logged-in session");
}

std::optional<Finding> detect_fingerprint_script(std::string_view body, const AnalyzerConfig& cfg) {
  // Most specific (longest) signature wins; ties go to the earliest occurrence.
  std::optional<std::pair<std::string_view, std::size_t>> best;
  for (const auto& sig : cfg.fingerprint_signatures) {
    if (sig.empty()) continue;
    const auto pos = body.find(sig);
    if (pos == std::string_view::npos) continue;
    if (!best || sig.size() > best->first.size() || (sig.size() == best->first.size() && pos < best->second)) {
      best = std::make_pair(body.substr(pos, sig.size()), pos);
    }
  }
  if (!best) return std::nullopt;
  return make(ThreatClass::FingerprintRisk, Severity::Medium, best->first,
              "page runs a device-fingerprinting script");
}

std::vector<Finding> analyze_uri(std::string_view uri, const AnalyzerConfig& cfg) {
  std::vector<Finding> out;
  const auto u = url::parse(uri);
  const bool web = u && (u->scheme_lower == "http" || u->scheme_lower == "https");
  if (web || !u) {
    if (auto f = detect_spoof(uri, cfg)) out.push_back(std::move(*f));
  }
  if (auto f = detect_auto_action(uri)) out.push_back(std::move(*f));
  if (auto f = detect_geo_leak(uri)) out.push_back(std::move(*f));
  if (auto f = detect_csrf(uri, cfg)) out.push_back(std::move(*f));
  return out;
}

std::string analyzed_text(const ndef::NdefRecord& rec) {
  if (rec.is_uri()) return ndef::decode_uri_record(rec);
  if (rec.tnf() == ndef::Tnf::AbsoluteUri) return rec.type_string();
  if (rec.is_text()) {
    try {
      return ndef::decode_text_record(rec).text;
    } catch (const Error&) {
      return to_string(rec.payload());
    }
  }
  return to_string(rec.payload());
}

ThreatReport analyze_message(const ndef::NdefMessage& msg, const AnalyzerConfig& cfg,
                             std::optional<std::string_view> page_body) {
  ThreatReport report;
  const auto& recs = msg.records();
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& rec = recs[i];
    std::vector<Finding> found;
    if (rec.is_uri() || rec.tnf() == ndef::Tnf::AbsoluteUri) {
      found = analyze_uri(analyzed_text(rec), cfg);
    } else if (rec.is_vcard()) {
      try {
        const auto contact = ndef::parse_vcard(rec.payload());
        found.push_back(make(ThreatClass::ContactInjection, Severity::Medium, contact.full_name,
                             "tag adds contact '" + contact.full_name + "' to the address book"));
      } catch (const Error&) {
        found.push_back(make(ThreatClass::MalformedRecord, Severity::Info, "", "undecodable record"));
      }
    } else if (rec.is_text()) {
      try {
        ndef::decode_text_record(rec);
      } catch (const Error&) {
        found.push_back(make(ThreatClass::MalformedRecord, Severity::Info, "", "undecodable record"));
      }
    }
    for (auto& f : found) {
      f.record_index = i;
      report.findings.push_back(std::move(f));
    }
  }
  if (page_body) {
    if (auto f = detect_fingerprint_script(*page_body, cfg)) report.findings.push_back(std::move(*f));
  }

  std::stable_sort(report.findings.begin(), report.findings.end(), [&](const Finding& a, const Finding& b) {
    if (a.severity != b.severity) return a.severity > b.severity;
    return a.record_index.value_or(recs.size()) < b.record_index.value_or(recs.size());
  });
  return report;
}

std::string report_to_json(const ThreatReport& r, int indent) {
  nlohmann::json findings = nlohmann::json::array();
  for (const auto& f : r.findings) {
    findings.push_back({{"class", class_name(f.threat_class)},
                        {"severity", severity_name(f.severity)},
                        {"evidence", f.evidence},
                        {"detail", f.detail},
                        {"record", f.record_index ? nlohmann::json(*f.record_index) : nlohmann::json(nullptr)}});
  }
  return nlohmann::json{{"findings", findings}}.dump(indent, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace nfctk::threat
