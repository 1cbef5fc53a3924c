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

#include "cli/commands.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cli/passphrase.hpp"
#include "qrypt0/module_image.hpp"
#include "qrypt0/primitives.hpp"
#include "qrypt0/qr_codec.hpp"

namespace qrypt0::cli {
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kEraseChunk = 64 * 1024;

void report_error(Environment& env, const Error& e) { *env.err << "error: " << e.what() << '\n'; }

Bytes read_all(std::istream& in) {
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Bytes read_message(Environment& env, const std::optional<fs::path>& in_path) {
  if (!in_path) {
    if (!env.in) fail(Errc::IoFailure, "no message source");
    Bytes data = read_all(*env.in);
    if (env.in->bad()) fail(Errc::IoFailure, "error reading standard input");
    return data;
  }
  std::ifstream in(*in_path, std::ios::binary);
  if (!in) fail(Errc::IoFailure, "cannot open " + in_path->string());
  Bytes data = read_all(in);
  if (in.bad()) fail(Errc::IoFailure, "error reading " + in_path->string());
  return data;
}

std::string format_utc(std::uint64_t unix_seconds) {
  const auto t = static_cast<std::time_t>(unix_seconds);
  std::tm tm{};
  if (::gmtime_r(&t, &tm) == nullptr) return std::to_string(unix_seconds);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

std::string format_age(std::uint64_t then, std::uint64_t now) {
  if (then > now) return std::to_string(then - now) + " s in the future";
  return std::to_string(now - then) + " s ago";
}

const ChannelKeys& keys_for(Environment& env, const std::string& channel_id) {
  std::string passphrase = env.passphrase(channel_id);
  if (passphrase.empty()) fail(Errc::EmptyPassphrase, "passphrase must not be empty");
  const ChannelKeys& keys = env.key_cache->get(passphrase, channel_id);
  primitives::secure_zero(std::span(reinterpret_cast<std::uint8_t*>(passphrase.data()),
                                    passphrase.size()));
  return keys;
}

void require_channel_id(const std::string& channel_id) {
  if (!valid_channel_id(channel_id))
    fail(Errc::BadChannelId, "channel id must be non-empty printable ASCII without '/'");
}

std::string random_hex_name() {
  std::array<std::uint8_t, 12> raw{};
  primitives::fill_random(raw);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string name;
  for (std::uint8_t b : raw) {
    name.push_back(kHex[b >> 4]);
    name.push_back(kHex[b & 15]);
  }
  return name;
}

void overwrite_pass(int fd, std::uint64_t size, bool random, const fs::path& path) {
  if (::lseek(fd, 0, SEEK_SET) != 0) fail(Errc::IoFailure, "seek " + path.string());
  std::vector<std::uint8_t> chunk(kEraseChunk, 0);
  std::uint64_t left = size;
  while (left > 0) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(left, chunk.size()));
    if (random) primitives::fill_random(std::span(chunk.data(), n));
    std::size_t done = 0;
    while (done < n) {
      const ssize_t w = ::write(fd, chunk.data() + done, n - done);
      if (w < 0 && errno == EINTR) continue;
      if (w <= 0) fail(Errc::IoFailure, "overwrite " + path.string() + ": " + std::strerror(errno));
      done += static_cast<std::size_t>(w);
    }
    left -= n;
  }
  if (::fsync(fd) != 0) fail(Errc::IoFailure, "fsync " + path.string());
}

}  // namespace

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::BadLength:
    case Errc::BadPadding:
    case Errc::BadBodyLen:
    case Errc::BadMagic:
    case Errc::UnsupportedVersion:
    case Errc::UnsupportedSuite:
    case Errc::AuthFailure:
    case Errc::TooManyErrors:
    case Errc::NoSymbolFound:
    case Errc::FormatInfoUnreadable:
    case Errc::VersionInfoUnreadable:
    case Errc::StructureMismatch:
    case Errc::MalformedImageFile:
    case Errc::GapTooLarge:
      return kExitAuthOrCorruption;
    case Errc::BodyTooLong:
    case Errc::EmptyPassphrase:
    case Errc::BadChannelId:
    case Errc::PayloadTooLarge:
    case Errc::NotARegularFile:
    case Errc::InvalidArgument:
      return kExitUsage;
    case Errc::EntropyUnavailable:
    case Errc::IoFailure:
    case Errc::StateIoFailure:
    case Errc::CorruptState:
    case Errc::AlreadyExists:
    case Errc::UnknownChannel:
      return kExitStateOrIo;
  }
  return kExitStateOrIo;
}

const ChannelKeys& KeyCache::get(const std::string& passphrase, const std::string& channel_id) {
  const auto key = std::make_pair(passphrase, channel_id);
  auto it = keys_.find(key);
  if (it == keys_.end()) it = keys_.emplace(key, derive_keys(passphrase, channel_id)).first;
  return it->second;
}

Environment process_environment() {
  Environment env;
  if (const char* dir = std::getenv(kStateDirEnv); dir && *dir) {
    env.state_dir = dir;
  } else if (const char* xdg = std::getenv("XDG_STATE_HOME"); xdg && *xdg) {
    env.state_dir = fs::path(xdg) / "qrypt0";
  } else if (const char* home = std::getenv("HOME"); home && *home) {
    env.state_dir = fs::path(home) / ".local" / "state" / "qrypt0";
  } else {
    env.state_dir = fs::path(".qrypt0");
  }
  env.passphrase = [](std::string_view channel_id) {
    return prompt_passphrase(channel_id, std::cerr);
  };
  env.clock = [] {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::seconds>(now).count());
  };
  env.out = &std::cout;
  env.err = &std::cerr;
  env.in = &std::cin;
  static KeyCache cache;
  env.key_cache = &cache;
  return env;
}

int cmd_init(Environment& env, const std::string& channel_id, Profile profile) {
  try {
    require_channel_id(channel_id);
    ChannelStore store(env.state_dir);
    const auto record = store.create(ChannelConfig{channel_id, profile, env.clock()});
    *env.out << "initialized channel '" << channel_id << "'\n"
             << "profile: " << profile_name(profile) << " (max message "
             << max_body(profile) << " bytes, frame " << frame_size(profile) << " bytes)\n"
             << "state: " << store.state_path(channel_id).string() << '\n'
             << "next send number: " << record.state.next_send << '\n'
             << "The passphrase is not stored; both parties enter it per message.\n";
    return kExitOk;
  } catch (const Error& e) {
    report_error(env, e);
    return exit_code_for(e.code());
  }
}

int cmd_encrypt(Environment& env, const std::string& channel_id,
                const std::optional<fs::path>& in_path, const fs::path& out_path, int scale) {
  Bytes message;
  try {
    require_channel_id(channel_id);
    if (scale < 1) fail(Errc::InvalidArgument, "--scale must be >= 1");
    message = read_message(env, in_path);

    ChannelStore store(env.state_dir);
    ChannelSession session = store.open(channel_id);
    const Profile profile = session.config().profile;
    if (message.size() > max_body(profile))
      fail(Errc::BodyTooLong, "message is " + std::to_string(message.size()) + " bytes; the " +
                                  std::string(profile_name(profile)) + " profile allows at most " +
                                  std::to_string(max_body(profile)));

    const ChannelKeys& keys = keys_for(env, channel_id);

    Envelope envelope;
    envelope.profile = profile;
    envelope.body = std::move(message);
    envelope.msg_number = session.allocate_send_number();
    envelope.timestamp = env.clock();

    const Bytes frame = seal(envelope, keys, env.nonces);
    primitives::secure_zero(envelope.body);

    const auto symbol = qr::encode(frame, qr::EncodeOptions{});
    write_pbm(qr::render(symbol, scale), out_path);

    *env.out << "message number: " << envelope.msg_number << '\n'
             << "frame bytes: " << frame.size() << '\n'
             << "symbol: version " << symbol.version << ", " << symbol.side() << 'x'
             << symbol.side() << " modules, EC level L, mask " << symbol.mask << '\n'
             << "wrote " << out_path.string() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    primitives::secure_zero(message);
    report_error(env, e);
    return exit_code_for(e.code());
  }
}

int cmd_decrypt(Environment& env, const std::string& channel_id, const fs::path& in_path) {
  try {
    require_channel_id(channel_id);
    const auto image = read_pbm(in_path);
    const auto report = qr::decode_report(image);

    ChannelStore store(env.state_dir);
    ChannelSession session = store.open(channel_id);
    const ChannelKeys& keys = keys_for(env, channel_id);

    Envelope envelope = open(report.payload, keys, session.config().profile);
    const ReceiveOutcome outcome = session.register_received(envelope.msg_number);
    if (outcome.kind == ReceiveOutcome::Kind::Replay) {
      primitives::secure_zero(envelope.body);
      *env.err << "error: Replay: message " << envelope.msg_number
               << " was already accepted on this channel\n";
      return kExitAuthOrCorruption;
    }

    *env.out << "message number: " << envelope.msg_number << '\n'
             << "timestamp: " << format_utc(envelope.timestamp) << " ("
             << format_age(envelope.timestamp, env.clock()) << ")\n";
    if (report.corrected_codewords > 0)
      *env.out << "note: " << report.corrected_codewords << " damaged codewords corrected\n";
    if (outcome.kind == ReceiveOutcome::Kind::AcceptedLate)
      *env.out << "note: late delivery, message " << envelope.msg_number
               << " fills an earlier gap\n";
    if (!outcome.gaps.empty()) {
      *env.out << "warning: missing message numbers:";
      for (std::uint64_t g : outcome.gaps) *env.out << ' ' << g;
      *env.out << '\n';
    }
    *env.out << "---\n";
    env.out->write(reinterpret_cast<const char*>(envelope.body.data()),
                   static_cast<std::streamsize>(envelope.body.size()));
    env.out->flush();
    primitives::secure_zero(envelope.body);
    return kExitOk;
  } catch (const Error& e) {
    report_error(env, e);
    return exit_code_for(e.code());
  }
}

int cmd_courier(Environment& env, const fs::path& in_path, const fs::path& out_path, int scale) {
  try {
    if (scale < 1) fail(Errc::InvalidArgument, "--scale must be >= 1");
    std::error_code ec;
    if (in_path == out_path || fs::weakly_canonical(in_path, ec) == fs::weakly_canonical(out_path, ec))
      fail(Errc::InvalidArgument, "courier output must use a new file name");

    const auto frame = qr::decode(read_pbm(in_path));
    require_frame_header(frame);

    const auto symbol = qr::encode(frame, qr::EncodeOptions{});
    write_pbm(qr::render(symbol, scale), out_path);
    *env.out << "frame bytes: " << frame.size() << '\n'
             << "symbol: version " << symbol.version << ", " << symbol.side() << 'x'
             << symbol.side() << " modules\n"
             << "wrote " << out_path.string() << '\n';
    return kExitOk;
  } catch (const Error& e) {
    report_error(env, e);
    return exit_code_for(e.code());
  }
}

int cmd_inspect(Environment& env, const fs::path& in_path) {
  try {
    const auto report = qr::decode_report(read_pbm(in_path));
    const auto header = inspect_frame_header(report.payload);
    *env.out << "symbol version: " << report.version << '\n'
             << "frame bytes: " << report.payload.size() << '\n';
    if (!header.magic_ok) {
      *env.out << "not a qrypt0 frame\n";
      return kExitAuthOrCorruption;
    }
    *env.out << "magic: ok\n"
             << "frame version: " << (header.version_ok ? "ok" : "unsupported") << '\n'
             << "suite: " << (header.suite_ok ? "ok" : "unsupported") << '\n';
    return header.ok() ? kExitOk : kExitAuthOrCorruption;
  } catch (const Error& e) {
    report_error(env, e);
    return exit_code_for(e.code());
  }
}

int cmd_erase(Environment& env, const fs::path& path) {
  try {
    std::error_code ec;
    const auto status = fs::symlink_status(path, ec);
    if (ec || !fs::exists(status)) fail(Errc::IoFailure, "cannot access " + path.string());
    if (!fs::is_regular_file(status))
      fail(Errc::NotARegularFile, path.string() + " is not a regular file");

    const int fd = ::open(path.c_str(), O_WRONLY | O_CLOEXEC | O_NOFOLLOW);
    if (fd < 0) fail(Errc::IoFailure, "open " + path.string() + ": " + std::strerror(errno));
    try {
      struct stat st{};
      if (::fstat(fd, &st) != 0) fail(Errc::IoFailure, "stat " + path.string());
      const auto size = static_cast<std::uint64_t>(st.st_size);
      overwrite_pass(fd, size, false, path);
      overwrite_pass(fd, size, true, path);
      if (::ftruncate(fd, 0) != 0 || ::fsync(fd) != 0)
        fail(Errc::IoFailure, "truncate " + path.string());
    } catch (...) {
      ::close(fd);
      throw;
    }
    ::close(fd);

    const fs::path renamed = path.parent_path() / random_hex_name();
    fs::rename(path, renamed, ec);
    const fs::path& victim = ec ? path : renamed;
    if (!fs::remove(victim, ec) || ec)
      fail(Errc::IoFailure, "unlink " + victim.string() + ": " + ec.message());

    *env.out << "erased " << path.string() << '\n'
             << "caveat: journaling, copy-on-write and flash-translation storage may keep "
                "older copies of the data outside this file's blocks.\n";
    return kExitOk;
  } catch (const Error& e) {
    report_error(env, e);
    return exit_code_for(e.code());
  }
}

}  // namespace qrypt0::cli
