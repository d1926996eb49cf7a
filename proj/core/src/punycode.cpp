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

#include <cstdint>
#include <limits>
#include <vector>

#include "nfctk/homoglyph.hpp"
#include "utf8.hpp"

namespace nfctk::threat {

namespace {

constexpr std::uint32_t kBase = 36;
constexpr std::uint32_t kTMin = 1;
constexpr std::uint32_t kTMax = 26;
constexpr std::uint32_t kSkew = 38;
constexpr std::uint32_t kDamp = 700;
constexpr std::uint32_t kInitialBias = 72;
constexpr std::uint32_t kInitialN = 128;

std::uint32_t adapt(std::uint32_t delta, std::uint32_t num_points, bool first_time) {
  delta = first_time ? delta / kDamp : delta / 2;
  delta += delta / num_points;
  std::uint32_t k = 0;
  while (delta > ((kBase - kTMin) * kTMax) / 2) {
    delta /= kBase - kTMin;
    k += kBase;
  }
  return k + (kBase - kTMin + 1) * delta / (delta + kSkew);
}

std::optional<std::uint32_t> digit_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0' + 26);
  if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a');
  if (c >= 'A' && c <= 'Z') return static_cast<std::uint32_t>(c - 'A');
  return std::nullopt;
}


}  // namespace

std::optional<std::string> punycode_decode(std::string_view input) {
  constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> output;

  // Basic code points precede the last delimiter.
  const auto delim = input.rfind('-');
  std::size_t in = 0;
  if (delim != std::string_view::npos) {
    for (std::size_t j = 0; j < delim; ++j) {
      const auto c = static_cast<unsigned char>(input[j]);
      if (c >= 0x80) return std::nullopt;
      output.push_back(c);
    }
    in = delim + 1;
  }

  std::uint32_t n = kInitialN;
  std::uint32_t i = 0;
  std::uint32_t bias = kInitialBias;
  while (in < input.size()) {
    const std::uint32_t old_i = i;
    std::uint32_t w = 1;
    for (std::uint32_t k = kBase;; k += kBase) {
      if (in >= input.size()) return std::nullopt;
      const auto digit = digit_value(input[in++]);
      if (!digit) return std::nullopt;
      if (*digit > (kMax - i) / w) return std::nullopt;
      i += *digit * w;
      const std::uint32_t t = k <= bias ? kTMin : (k >= bias + kTMax ? kTMax : k - bias);
      if (*digit < t) break;
      if (w > kMax / (kBase - t)) return std::nullopt;
      w *= kBase - t;
    }
    const auto count = static_cast<std::uint32_t>(output.size() + 1);
    bias = adapt(i - old_i, count, old_i == 0);
    if (i / count > kMax - n) return std::nullopt;
    n += i / count;
    i %= count;
    if (n > 0x10FFFF || (n >= 0xD800 && n <= 0xDFFF)) return std::nullopt;
    output.insert(output.begin() + i, n);
    ++i;
  }

  std::string utf8;
  for (auto cp : output) detail::append_utf8(utf8, cp);
  return utf8;
}

}  // namespace nfctk::threat
