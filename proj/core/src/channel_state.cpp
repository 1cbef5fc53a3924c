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

#include "qrypt0/channel_state.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>

#include "qrypt0/crypto_suite.hpp"
#include "qrypt0/error.hpp"

namespace qrypt0 {
namespace {

constexpr std::string_view kStateHeader = "qrypt0-state-v1";

std::string errno_text() { return std::strerror(errno); }

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    fail(Errc::CorruptState, "bad " + std::string(what) + " value '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view expect_key(std::string_view line, std::string_view key) {
  if (line.size() < key.size() + 1 || line.substr(0, key.size()) != key ||
      line[key.size()] != '=')
    fail(Errc::CorruptState, "expected '" + std::string(key) + "=' line");
  return line.substr(key.size() + 1);
}

void sync_fd(int fd, const std::filesystem::path& path) {
  if (::fsync(fd) != 0)
    fail(Errc::StateIoFailure, "fsync " + path.string() + ": " + errno_text());
}

}  // namespace

ReceiveOutcome apply_received(ChannelState& state, std::uint64_t n) {
  ReceiveOutcome out;
  if (n > state.highest_received) {
    if (n - state.highest_received - 1 > kMaxGapSpan)
      fail(Errc::GapTooLarge, "message " + std::to_string(n) + " would open a gap of " +
                                  std::to_string(n - state.highest_received - 1) + " numbers");
    for (std::uint64_t m = state.highest_received + 1; m < n; ++m) {
      out.gaps.push_back(m);
      state.received_gaps.insert(m);
    }
    state.highest_received = n;
    out.kind = ReceiveOutcome::Kind::Accepted;
  } else if (state.received_gaps.erase(n) == 1) {
    out.kind = ReceiveOutcome::Kind::AcceptedLate;
  } else {
    out.kind = ReceiveOutcome::Kind::Replay;
  }
  return out;
}

std::string serialize_record(const ChannelRecord& record) {
  std::ostringstream out;
  out << kStateHeader << '\n'
      << "channel=" << record.config.channel_id << '\n'
      << "profile=" << profile_name(record.config.profile) << '\n'
      << "created_at=" << record.config.created_at << '\n'
      << "next_send=" << record.state.next_send << '\n'
      << "highest_received=" << record.state.highest_received << '\n'
      << "gaps=";
  bool first = true;
  for (std::uint64_t g : record.state.received_gaps) {
    if (!first) out << ',';
    out << g;
    first = false;
  }
  out << '\n';
  return out.str();
}

ChannelRecord parse_record(std::string_view text, std::string_view expected_channel) {
  auto lines = split_lines(text);
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() != 7) fail(Errc::CorruptState, "state file must have exactly 7 lines");
  if (lines[0] != kStateHeader) fail(Errc::CorruptState, "missing state header");

  ChannelRecord record;
  record.config.channel_id = std::string(expect_key(lines[1], "channel"));
  if (record.config.channel_id != expected_channel)
    fail(Errc::CorruptState, "state file belongs to channel '" + record.config.channel_id + "'");
  const auto profile = parse_profile(expect_key(lines[2], "profile"));
  if (!profile || expect_key(lines[2], "profile") != profile_name(*profile))
    fail(Errc::CorruptState, "bad profile");
  record.config.profile = *profile;
  record.config.created_at = parse_u64(expect_key(lines[3], "created_at"), "created_at");
  record.state.next_send = parse_u64(expect_key(lines[4], "next_send"), "next_send");
  record.state.highest_received =
      parse_u64(expect_key(lines[5], "highest_received"), "highest_received");
  if (record.state.next_send == 0) fail(Errc::CorruptState, "next_send must be >= 1");

  std::string_view gaps = expect_key(lines[6], "gaps");
  std::uint64_t previous = 0;
  while (!gaps.empty()) {
    const auto comma = gaps.find(',');
    const std::uint64_t g = parse_u64(gaps.substr(0, comma), "gaps");
    if (g == 0 || g <= previous || g >= record.state.highest_received)
      fail(Errc::CorruptState, "gap " + std::to_string(g) + " out of order or out of range");
    record.state.received_gaps.insert(g);
    previous = g;
    if (comma == std::string_view::npos) break;
    gaps.remove_prefix(comma + 1);
    if (gaps.empty()) fail(Errc::CorruptState, "trailing comma in gaps");
  }
  return record;
}

bool state_exists(const std::filesystem::path& path) {
  std::error_code ec;
  const bool found = std::filesystem::exists(path, ec);
  if (ec) fail(Errc::StateIoFailure, "cannot stat " + path.string() + ": " + ec.message());
  return found;
}

ChannelRecord load_state(const std::filesystem::path& path, std::string_view channel_id) {
  if (!state_exists(path)) {
    ChannelRecord fresh;
    fresh.config.channel_id = std::string(channel_id);
    return fresh;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::StateIoFailure, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(Errc::StateIoFailure, "read error on " + path.string());
  return parse_record(buf.str(), channel_id);
}

void store_state(const std::filesystem::path& path, const ChannelRecord& record) {
  const std::string text = serialize_record(record);
  std::filesystem::path tmp = path;
  tmp += ".tmp";

  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0600);
  if (fd < 0) fail(Errc::StateIoFailure, "create " + tmp.string() + ": " + errno_text());
  std::size_t written = 0;
  while (written < text.size()) {
    const ssize_t n = ::write(fd, text.data() + written, text.size() - written);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      const std::string why = errno_text();
      ::close(fd);
      fail(Errc::StateIoFailure, "write " + tmp.string() + ": " + why);
    }
    written += static_cast<std::size_t>(n);
  }
  try {
    sync_fd(fd, tmp);
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);

  if (::rename(tmp.c_str(), path.c_str()) != 0)
    fail(Errc::StateIoFailure, "rename to " + path.string() + ": " + errno_text());

  const auto parent = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const int dir_fd = ::open(parent.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC);
  if (dir_fd >= 0) {
    ::fsync(dir_fd);
    ::close(dir_fd);
  }
}

FileLock::FileLock(const std::filesystem::path& lock_path) {
  fd_ = ::open(lock_path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0600);
  if (fd_ < 0) fail(Errc::StateIoFailure, "open lock " + lock_path.string() + ": " + errno_text());
  while (::flock(fd_, LOCK_EX) != 0) {
    if (errno == EINTR) continue;
    const std::string why = errno_text();
    ::close(fd_);
    fd_ = -1;
    fail(Errc::StateIoFailure, "lock " + lock_path.string() + ": " + why);
  }
}

FileLock::~FileLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

FileLock::FileLock(FileLock&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}

FileLock& FileLock::operator=(FileLock&& other) noexcept {
  if (this != &other) {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
    fd_ = std::exchange(other.fd_, -1);
  }
  return *this;
}

ChannelSession::ChannelSession(FileLock lock, std::filesystem::path path, ChannelRecord record)
    : lock_(std::move(lock)), path_(std::move(path)), record_(std::move(record)) {}

std::uint64_t ChannelSession::allocate_send_number() {
  const std::uint64_t n = record_.state.next_send;
  if (n == UINT64_MAX) fail(Errc::StateIoFailure, "send counter exhausted");
  ChannelRecord updated = record_;
  updated.state.next_send = n + 1;
  store_state(path_, updated);
  record_ = std::move(updated);
  return n;
}

ReceiveOutcome ChannelSession::register_received(std::uint64_t n) {
  ChannelRecord updated = record_;
  ReceiveOutcome outcome = apply_received(updated.state, n);
  if (outcome.kind != ReceiveOutcome::Kind::Replay) {
    store_state(path_, updated);
    record_ = std::move(updated);
  }
  return outcome;
}

ChannelStore::ChannelStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ChannelStore::state_path(std::string_view channel_id) const {
  return dir_ / (std::string(channel_id) + ".state");
}

std::filesystem::path ChannelStore::lock_path(std::string_view channel_id) const {
  return dir_ / (std::string(channel_id) + ".lock");
}

bool ChannelStore::exists(std::string_view channel_id) const {
  return state_exists(state_path(channel_id));
}

ChannelRecord ChannelStore::create(const ChannelConfig& config) {
  if (!valid_channel_id(config.channel_id))
    fail(Errc::BadChannelId, "channel id must be non-empty printable ASCII without '/'");
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) fail(Errc::StateIoFailure, "create " + dir_.string() + ": " + ec.message());

  FileLock lock(lock_path(config.channel_id));
  const auto path = state_path(config.channel_id);
  if (state_exists(path))
    fail(Errc::AlreadyExists, "channel '" + config.channel_id + "' is already initialized");
  ChannelRecord record{config, ChannelState{}};
  store_state(path, record);
  return record;
}

ChannelSession ChannelStore::open(std::string_view channel_id) {
  if (!valid_channel_id(channel_id))
    fail(Errc::BadChannelId, "channel id must be non-empty printable ASCII without '/'");
  const auto path = state_path(channel_id);
  if (!state_exists(path))
    fail(Errc::UnknownChannel, "channel '" + std::string(channel_id) + "' is not initialized");
  FileLock lock(lock_path(channel_id));
  // Re-check under the lock; load_state would otherwise hand back a fresh record.
  if (!state_exists(path))
    fail(Errc::UnknownChannel, "channel '" + std::string(channel_id) + "' is not initialized");
  ChannelRecord record = load_state(path, channel_id);
  return ChannelSession(std::move(lock), path, std::move(record));
}

}  // namespace qrypt0
