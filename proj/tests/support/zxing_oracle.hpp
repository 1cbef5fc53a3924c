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

// Runs the zxing-cpp based reader in tests/interop over PBM files. zxing-cpp
// is a pre-existing decoder with no code in common with this project.

#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qrypt0::testing {

struct ForeignRead {
  bool ok = false;
  std::string version;
  std::string ec_level;
  std::string mask;
  std::string payload_hex;
};

struct ForeignReader {
  bool available = false;
  std::string diagnostics;
  std::map<std::string, ForeignRead> results;  // keyed by path string
};

inline ForeignReader run_foreign_reader(const std::string& python, const std::string& script,
                                        const std::vector<std::filesystem::path>& files) {
  ForeignReader reader;
  std::string cmd = "'" + python + "' '" + script + "'";
  for (const auto& f : files) cmd += " '" + f.string() + "'";
  cmd += " 2>&1";

  struct Closer {
    void operator()(FILE* f) const { pclose(f); }
  };
  FILE* raw = popen(cmd.c_str(), "r");
  if (raw == nullptr) {
    reader.diagnostics = "popen failed";
    return reader;
  }
  std::string output;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, raw)) > 0) output.append(buf, n);
  const int status = pclose(raw);
  if (status != 0) {
    reader.diagnostics = output;
    return reader;
  }
  reader.available = true;

  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string path;
    ForeignRead read;
    fields >> path >> read.version;
    if (read.version == "FAIL") {
      reader.results[path] = read;
      continue;
    }
    fields >> read.ec_level >> read.mask;
    read.ok = !fields.fail();
    fields >> read.payload_hex;  // empty for an empty payload
    reader.results[path] = read;
  }
  return reader;
}

}  // namespace qrypt0::testing
