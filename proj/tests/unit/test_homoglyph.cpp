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

#include "nfctk/homoglyph.hpp"

using namespace nfctk::threat;

// Expected decodings produced offline with an independent RFC 3492 codec.
TEST_CASE("punycode_decode") {
  CHECK(punycode_decode("bnksite-hwa") == "b\xc3\xa1nksite");
  CHECK(punycode_decode("bnksite-one") == "b\xcc\x9fnksite");
  CHECK(punycode_decode("pypal-4ve") == "p\xd0\xb0ypal");
  CHECK(punycode_decode("mnchen-3ya") == "m\xc3\xbc" "nchen");
  CHECK(punycode_decode("bcher-kva") == "b\xc3\xbc" "cher");
  CHECK(punycode_decode("80ak6aa92e") == "\xd0\xb0\xd1\x80\xd1\x80\xd3\x8f\xd0\xb5");
  CHECK(punycode_decode("abc-") == "abc");
  CHECK_FALSE(punycode_decode("bnksite-!!").has_value());
  CHECK_FALSE(punycode_decode("zzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzzz").has_value());
}

TEST_CASE("decode_idn_host") {
  CHECK(decode_idn_host("xn--bnksite-hwa.com") == "b\xc3\xa1nksite.com");
  CHECK(decode_idn_host("www.XN--pypal-4ve.com") == "www.p\xd0\xb0ypal.com");
  CHECK(decode_idn_host("plain.example.com") == "plain.example.com");
  CHECK(decode_idn_host("xn--!!.com") == "xn--!!.com");
}

TEST_CASE("skeleton") {
  CHECK(skeleton("PayPal.com") == "paypal.com");
  CHECK(skeleton("paypa1.com") == "paypal.com");
  CHECK(skeleton("g00gle.com") == "google.com");
  CHECK(skeleton("b\xc3\xa1nksite.com") == "banksite.com");
  CHECK(skeleton("p\xd0\xb0ypal.com") == "paypal.com");
  CHECK(skeleton("rnicrosoft.com") == "microsoft.com");
  CHECK(skeleton("vvikipedia.org") == "wikipedia.org");
  // Combining marks are not folded.
  CHECK(skeleton("b\xcc\x9fnksite.com") != "banksite.com");
  // Invalid UTF-8 passes through.
  CHECK(skeleton("a\xff" "b") == "a\xff" "b");
}

TEST_CASE("edit_distance") {
  CHECK(edit_distance("", "") == 0);
  CHECK(edit_distance("abc", "") == 3);
  CHECK(edit_distance("paypa1.com", "paypal.com") == 1);
  CHECK(edit_distance("kitten", "sitting") == 3);
  CHECK(edit_distance("gooogle.com", "google.com") == 1);
  CHECK(edit_distance("flaw", "lawn") == 2);
}
