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
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qrypt0/envelope.hpp"

namespace qrypt0 {

struct ChannelConfig {
  std::string channel_id;
  Profile profile = Profile::Full;
  std::uint64_t created_at = 0;  // Unix seconds

  friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;
};

/// Counters for one channel. received_gaps holds every number below
/// highest_received that has not been accepted yet.
struct ChannelState {
  std::uint64_t next_send = 1;
  std::uint64_t highest_received = 0;
  std::set<std::uint64_t> received_gaps;

  friend bool operator==(const ChannelState&, const ChannelState&) = default;
};

struct ChannelRecord {
  ChannelConfig config;
  ChannelState state;

  friend bool operator==(const ChannelRecord&, const ChannelRecord&) = default;
};

/// A single gap larger than this is refused rather than tracked.
inline constexpr std::uint64_t kMaxGapSpan = 1u << 20;

struct ReceiveOutcome {
  enum class Kind { Accepted, AcceptedLate, Replay };
  Kind kind = Kind::Replay;
  std::vector<std::uint64_t> gaps;  // numbers newly found missing

  friend bool operator==(const ReceiveOutcome&, const ReceiveOutcome&) = default;
};

/// Applies the receive rule to `state` in memory:
///   n > highest_received      -> Accepted, the skipped numbers become gaps
///   n in received_gaps        -> AcceptedLate, the gap is closed
///   anything else             -> Replay, state untouched
ReceiveOutcome apply_received(ChannelState& state, std::uint64_t n);

std::string serialize_record(const ChannelRecord& record);
/// Strict parser; any deviation is CorruptState.
ChannelRecord parse_record(std::string_view text, std::string_view expected_channel);

/// A missing file yields a fresh record for `channel_id`; a present but
/// malformed one is CorruptState.
ChannelRecord load_state(const std::filesystem::path& path, std::string_view channel_id);
bool state_exists(const std::filesystem::path& path);
/// Write to a temporary sibling, fsync, rename over `path`.
void store_state(const std::filesystem::path& path, const ChannelRecord& record);

/// Advisory exclusive lock (flock) held for the object's lifetime.
class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& lock_path);
  ~FileLock();
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;
  FileLock(FileLock&& other) noexcept;
  FileLock& operator=(FileLock&& other) noexcept;

 private:
  int fd_ = -1;
};

/// Exclusive, persisted access to one channel. Every mutation is stored
/// before the call returns.
class ChannelSession {
 public:
  ChannelSession(FileLock lock, std::filesystem::path path, ChannelRecord record);

  const ChannelRecord& record() const noexcept { return record_; }
  const ChannelConfig& config() const noexcept { return record_.config; }
  const ChannelState& state() const noexcept { return record_.state; }

  /// Returns the number to use and persists the incremented counter first,
  /// so a crash can burn a number but never reuse one.
  std::uint64_t allocate_send_number();

  ReceiveOutcome register_received(std::uint64_t n);

 private:
  FileLock lock_;
  std::filesystem::path path_;
  ChannelRecord record_;
};

/// Directory holding one state file per channel.
class ChannelStore {
 public:
  explicit ChannelStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path state_path(std::string_view channel_id) const;
  bool exists(std::string_view channel_id) const;

  /// Throws AlreadyExists when the channel has a state file.
  ChannelRecord create(const ChannelConfig& config);
  /// Throws UnknownChannel when the channel was never initialized.
  ChannelSession open(std::string_view channel_id);

 private:
  std::filesystem::path lock_path(std::string_view channel_id) const;
  std::filesystem::path dir_;
};

}  // namespace qrypt0
