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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrypt0 {

/// Failure conditions reported across the library. Each value names one
/// distinct, operator-visible outcome.
enum class Errc {
  // envelope
  BodyTooLong,
  BadLength,
  BadPadding,
  BadBodyLen,
  // crypto_suite
  EmptyPassphrase,
  BadChannelId,
  BadMagic,
  UnsupportedVersion,
  UnsupportedSuite,
  AuthFailure,
  EntropyUnavailable,
  // rs_codec / qr_codec
  TooManyErrors,
  PayloadTooLarge,
  NoSymbolFound,
  FormatInfoUnreadable,
  VersionInfoUnreadable,
  StructureMismatch,
  IoFailure,
  MalformedImageFile,
  // channel_state
  StateIoFailure,
  CorruptState,
  AlreadyExists,
  UnknownChannel,
  GapTooLarge,
  // cli
  NotARegularFile,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace qrypt0
