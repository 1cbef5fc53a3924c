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

#include <iosfwd>
#include <string>
#include <string_view>

namespace qrypt0::cli {

inline constexpr const char* kPassphraseEnv = "QRYPT0_PASSPHRASE";
inline constexpr const char* kStateDirEnv = "QRYPT0_STATE_DIR";

/// Reads the channel passphrase from the controlling terminal with echo
/// disabled. QRYPT0_PASSPHRASE, when set, is used instead (tests only; a
/// warning goes to `err`).
std::string prompt_passphrase(std::string_view channel_id, std::ostream& err);

}  // namespace qrypt0::cli
