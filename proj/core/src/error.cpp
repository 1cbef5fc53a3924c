// Copyright 2026 The qrypt0 Authors
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

#include "qrypt0/error.hpp"

namespace qrypt0 {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::BodyTooLong: return "BodyTooLong";
    case Errc::BadLength: return "BadLength";
    case Errc::BadPadding: return "BadPadding";
    case Errc::BadBodyLen: return "BadBodyLen";
    case Errc::EmptyPassphrase: return "EmptyPassphrase";
    case Errc::BadChannelId: return "BadChannelId";
    case Errc::BadMagic: return "BadMagic";
    case Errc::UnsupportedVersion: return "UnsupportedVersion";
    case Errc::UnsupportedSuite: return "UnsupportedSuite";
    case Errc::AuthFailure: return "AuthFailure";
    case Errc::EntropyUnavailable: return "EntropyUnavailable";
    case Errc::TooManyErrors: return "TooManyErrors";
    case Errc::PayloadTooLarge: return "PayloadTooLarge";
    case Errc::NoSymbolFound: return "NoSymbolFound";
    case Errc::FormatInfoUnreadable: return "FormatInfoUnreadable";
    case Errc::VersionInfoUnreadable: return "VersionInfoUnreadable";
    case Errc::StructureMismatch: return "StructureMismatch";
    case Errc::IoFailure: return "IoFailure";
    case Errc::MalformedImageFile: return "MalformedImageFile";
    case Errc::StateIoFailure: return "StateIoFailure";
    case Errc::CorruptState: return "CorruptState";
    case Errc::AlreadyExists: return "AlreadyExists";
    case Errc::UnknownChannel: return "UnknownChannel";
    case Errc::GapTooLarge: return "GapTooLarge";
    case Errc::NotARegularFile: return "NotARegularFile";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qrypt0
