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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qrypt0/channel_state.hpp"
#include "qrypt0/crypto_suite.hpp"
#include "qrypt0/error.hpp"

namespace qrypt0::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitAuthOrCorruption = 1,
  kExitUsage = 2,
  kExitStateOrIo = 3,
};

int exit_code_for(Errc code) noexcept;

/// Memoizes derived keys within one process; the KDF is deliberately slow.
class KeyCache {
 public:
  const ChannelKeys& get(const std::string& passphrase, const std::string& channel_id);

 private:
  std::map<std::pair<std::string, std::string>, ChannelKeys> keys_;
};

/// Everything a command touches outside its arguments.
struct Environment {
  std::filesystem::path state_dir;
  std::function<std::string(std::string_view channel_id)> passphrase;
  NonceSource nonces = random_nonce;
  std::function<std::uint64_t()> clock;  // Unix seconds
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  std::istream* in = nullptr;  // message source when encrypt has no --in
  KeyCache* key_cache = nullptr;
};

/// Environment wired to the real process: QRYPT0_STATE_DIR (or
/// $XDG_STATE_HOME/qrypt0, ~/.local/state/qrypt0), no-echo prompt,
/// OS entropy, system clock, std streams.
Environment process_environment();

int cmd_init(Environment& env, const std::string& channel_id, Profile profile);
int cmd_encrypt(Environment& env, const std::string& channel_id,
                const std::optional<std::filesystem::path>& in_path,
                const std::filesystem::path& out_path, int scale = 1);
int cmd_decrypt(Environment& env, const std::string& channel_id,
                const std::filesystem::path& in_path);
int cmd_courier(Environment& env, const std::filesystem::path& in_path,
                const std::filesystem::path& out_path, int scale = 1);
int cmd_inspect(Environment& env, const std::filesystem::path& in_path);
int cmd_erase(Environment& env, const std::filesystem::path& path);

/// Parses argv and dispatches. Returns the process exit code.
int run(int argc, const char* const* argv, Environment& env);

}  // namespace qrypt0::cli
