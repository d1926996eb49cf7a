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

#include <doctest.h>

#include <random>

#include "nfctk/error.hpp"
#include "nfctk/vcard.hpp"
#include "support/oracles.hpp"

using namespace nfctk;
using namespace nfctk::ndef;

namespace {
Contact malicious() {
  return Contact{"Malicious Contact", "+123", "maliciouscontact@example.com", "MC;Mr.;", {}};
}
}  // namespace

TEST_CASE("vCard record for the malicious contact") {
  const auto rec = build_vcard_record(malicious());
  CHECK(rec.tnf() == Tnf::Mime);
  CHECK(rec.type_string() == "text/vcard");
  CHECK(rec.is_vcard());
  CHECK(to_string(rec.payload()) == nfctk::testing::kMaliciousVcard);
}

TEST_CASE("vCard omits empty TEL and EMAIL") {
  const auto text = render_vcard(Contact{"A", "", "", "", {}});
  CHECK(text == "BEGIN:VCARD\r\nVERSION:4.0\r\nFN:A\r\nEND:VCARD\r\n");
  CHECK(text.find("TEL") == std::string::npos);
  CHECK(text.find("EMAIL") == std::string::npos);
}

TEST_CASE("parse_vcard") {
  const auto c = parse_vcard(std::string_view(nfctk::testing::kMaliciousVcard));
  CHECK(c.full_name == "Malicious Contact");
  CHECK(c.tel == "+123");
  CHECK(c.email == "maliciouscontact@example.com");
  CHECK(c.name_parts == "MC;Mr.;");

  const auto minimal = parse_vcard(std::string_view("BEGIN:VCARD\r\nVERSION:4.0\r\nFN:A\r\nEND:VCARD"));
  CHECK(minimal == Contact{"A", "", "", "", {}});

  // LF-only line endings, plain TEL, unknown properties kept as extras.
  const auto lf = parse_vcard(std::string_view("BEGIN:VCARD\nFN:B\nTEL:555\nORG:Acme\nTEL:666\nEND:VCARD\n"));
  CHECK(lf.full_name == "B");
  CHECK(lf.tel == "555");
  CHECK(lf.extras == std::vector<std::string>{"ORG:Acme", "TEL:666"});
  CHECK(lf == Contact{"B", "555", "", "", {}});

  try {
    parse_vcard(std::string_view("hello"));
    FAIL("expected NotAVcard");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAVcard);
  }
  CHECK_THROWS_AS(parse_vcard(std::string_view("BEGIN:VCARD\r\nFN:x\r\n")), Error);
  CHECK_THROWS_AS(parse_vcard(std::string_view("")), Error);
}

TEST_CASE("property: vCard round trip") {
  std::mt19937_64 rng(3);
  auto field = [&](bool allow_empty) {
    // Printable ASCII without ':' so TEL's last-colon rule stays unambiguous.
    std::string s = nfctk::testing::random_printable(rng, 20, allow_empty ? 0 : 1);
    for (auto& ch : s) {
      if (ch == ':') ch = '-';
    }
    return s;
  };
  for (int i = 0; i < 1000; ++i) {
    const Contact c{field(false), field(true), field(true), field(true), {}};
    CHECK(parse_vcard(build_vcard_record(c).payload()) == c);
  }
}
