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

#include <stdexcept>
#include <string>
#include <string_view>

namespace nfctk {

enum class Errc {
  // codec
  TruncatedMessage,
  BadFlags,
  BadRecord,
  TrailingBytes,
  UnknownUriCode,
  NotAUriRecord,
  LangTooLong,
  InvalidLanguage,
  NotAVcard,
  // tags
  CapacityExceeded,
  InvalidCapacity,
  TagLocked,
  IoError,
  // channel
  IndexOutOfRange,
  // config / input files
  BadConfig,
  BadHex,
};

std::string_view errc_name(Errc code) noexcept;

/// All recoverable failures in the toolkit are reported through this type.
/// The code is machine-readable; what() carries a short human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// IoError is the only environmental failure; everything else is bad input.
  bool is_io() const noexcept { return code_ == Errc::IoError; }

 private:
  Errc code_;
};

}  // namespace nfctk
