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

#include "cli/passphrase.hpp"

#include <fcntl.h>
#include <termios.h>
#include <unistd.h>

#include <cstdlib>
#include <ostream>

#include "qrypt0/error.hpp"

namespace qrypt0::cli {
namespace {

class TerminalEchoOff {
 public:
  explicit TerminalEchoOff(int fd) : fd_(fd) {
    if (::tcgetattr(fd_, &saved_) == 0) {
      termios quiet = saved_;
      quiet.c_lflag &= ~static_cast<tcflag_t>(ECHO);
      active_ = ::tcsetattr(fd_, TCSAFLUSH, &quiet) == 0;
    }
  }
  ~TerminalEchoOff() {
    if (active_) ::tcsetattr(fd_, TCSAFLUSH, &saved_);
  }
  TerminalEchoOff(const TerminalEchoOff&) = delete;
  TerminalEchoOff& operator=(const TerminalEchoOff&) = delete;

 private:
  int fd_;
  termios saved_{};
  bool active_ = false;
};

}  // namespace

std::string prompt_passphrase(std::string_view channel_id, std::ostream& err) {
  if (const char* override_value = std::getenv(kPassphraseEnv)) {
    err << "warning: using " << kPassphraseEnv << " (insecure, intended for tests)\n";
    return override_value;
  }

  const int fd = ::open("/dev/tty", O_RDWR | O_CLOEXEC);
  if (fd < 0) fail(Errc::InvalidArgument, "no terminal available for the passphrase prompt");

  const std::string prompt = "Passphrase for channel '" + std::string(channel_id) + "': ";
  (void)!::write(fd, prompt.data(), prompt.size());

  std::string passphrase;
  {
    TerminalEchoOff quiet(fd);
    char c = 0;
    while (::read(fd, &c, 1) == 1 && c != '\n' && c != '\r') passphrase.push_back(c);
  }
  (void)!::write(fd, "\n", 1);
  ::close(fd);
  return passphrase;
}

}  // namespace qrypt0::cli
