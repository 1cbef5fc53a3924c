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

#include <CLI11.hpp>

#include <ostream>

#include "cli/commands.hpp"

namespace qrypt0::cli {

int run(int argc, const char* const* argv, Environment& env) {
  CLI::App app{"qrypt0: encrypted short messages carried in QR symbols between air-gapped machines",
               "qrypt0"};
  app.require_subcommand(1);

  std::string channel;
  std::string profile_text = "full";
  std::string in_file;
  std::string out_file;
  std::string erase_target;
  int scale = 1;

  auto* init = app.add_subcommand("init", "Create state for a pre-shared channel");
  init->add_option("--channel", channel, "Channel id shared by both parties")->required();
  init->add_option("--profile", profile_text, "full (2862-byte messages) or compact (1382)")
      ->check(CLI::IsMember({"full", "compact"}, CLI::ignore_case));

  auto* encrypt = app.add_subcommand("encrypt", "Seal a message into a QR symbol (isolated machine)");
  encrypt->add_option("--channel", channel)->required();
  encrypt->add_option("--in", in_file, "Message file (default: standard input)");
  encrypt->add_option("--out", out_file, "Output PBM")->required();
  encrypt->add_option("--scale", scale, "Pixels per module")->check(CLI::PositiveNumber);

  auto* decrypt = app.add_subcommand("decrypt", "Open a QR symbol and print the message");
  decrypt->add_option("--channel", channel)->required();
  decrypt->add_option("--in", in_file, "Input PBM")->required();

  auto* courier = app.add_subcommand("courier", "Re-encode ciphertext for transport (connected machine, no key)");
  courier->add_option("--in", in_file, "Received PBM")->required();
  courier->add_option("--out", out_file, "Fresh PBM under a new name")->required();
  courier->add_option("--scale", scale, "Pixels per module")->check(CLI::PositiveNumber);

  auto* inspect = app.add_subcommand("inspect", "Show what an observer without the key can see");
  inspect->add_option("--in", in_file, "Input PBM")->required();

  auto* erase = app.add_subcommand("erase", "Overwrite and delete a plaintext file");
  erase->add_option("file", erase_target, "File to erase")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    *env.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    *env.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    *env.err << "error: " << e.what() << '\n';
    for (const auto* sub : app.get_subcommands())
      *env.err << sub->help();
    if (app.get_subcommands().empty()) *env.err << app.help();
    return kExitUsage;
  }

  if (init->parsed()) return cmd_init(env, channel, *parse_profile(profile_text));
  if (encrypt->parsed()) {
    std::optional<std::filesystem::path> in;
    if (!in_file.empty()) in = in_file;
    return cmd_encrypt(env, channel, in, out_file, scale);
  }
  if (decrypt->parsed()) return cmd_decrypt(env, channel, in_file);
  if (courier->parsed()) return cmd_courier(env, in_file, out_file, scale);
  if (inspect->parsed()) return cmd_inspect(env, in_file);
  if (erase->parsed()) return cmd_erase(env, erase_target);
  return kExitUsage;
}

}  // namespace qrypt0::cli
