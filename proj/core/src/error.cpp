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

#include "nfctk/error.hpp"

namespace nfctk {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::TruncatedMessage: return "TruncatedMessage";
    case Errc::BadFlags: return "BadFlags";
    case Errc::BadRecord: return "BadRecord";
    case Errc::TrailingBytes: return "TrailingBytes";
    case Errc::UnknownUriCode: return "UnknownUriCode";
    case Errc::NotAUriRecord: return "NotAUriRecord";
    case Errc::LangTooLong: return "LangTooLong";
    case Errc::InvalidLanguage: return "InvalidLanguage";
    case Errc::NotAVcard: return "NotAVcard";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::InvalidCapacity: return "InvalidCapacity";
    case Errc::TagLocked: return "TagLocked";
    case Errc::IoError: return "IoError";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BadConfig: return "BadConfig";
    case Errc::BadHex: return "BadHex";
  }
  return "Unknown";
}

}  // namespace nfctk
