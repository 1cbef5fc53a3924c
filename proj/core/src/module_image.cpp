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

#include "qrypt0/module_image.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "qrypt0/error.hpp"

namespace qrypt0 {
namespace {

constexpr int kMaxDimension = 1 << 15;

// Skips whitespace and '#' comments, as PBM allows between tokens.
void skip_separators(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
      in.get();
    } else {
      return;
    }
  }
}

int read_dimension(std::istream& in, const char* what) {
  skip_separators(in);
  int value = 0;
  if (!(in >> value) || value <= 0 || value > kMaxDimension)
    fail(Errc::MalformedImageFile, std::string("bad PBM ") + what);
  return value;
}

}  // namespace

ModuleGrid::ModuleGrid(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) fail(Errc::InvalidArgument, "negative grid dimension");
  cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

void write_pbm(const ModuleImage& img, std::ostream& out) {
  out << "P1\n" << img.width() << ' ' << img.height() << '\n';
  for (int y = 0; y < img.height(); ++y) {
    int column = 0;
    for (int x = 0; x < img.width(); ++x) {
      if (column >= 70) {
        out << '\n';
        column = 0;
      }
      out << (img.get(x, y) ? '1' : '0');
      ++column;
    }
    out << '\n';
  }
}

void write_pbm(const ModuleImage& img, const std::filesystem::path& path) {
  std::ostringstream buf;
  write_pbm(img, buf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::IoFailure, "cannot open " + path.string() + " for writing");
  const std::string text = buf.str();
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) fail(Errc::IoFailure, "write failed for " + path.string());
}

ModuleImage read_pbm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '1')
    fail(Errc::MalformedImageFile, "missing P1 magic");
  const int width = read_dimension(in, "width");
  const int height = read_dimension(in, "height");

  ModuleImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      skip_separators(in);
      const int c = in.get();
      if (c == '1') {
        img.set(x, y, true);
      } else if (c != '0') {
        fail(Errc::MalformedImageFile, c == std::char_traits<char>::eof()
                                           ? "bit stream truncated"
                                           : "unexpected character in bit stream");
      }
    }
  }
  skip_separators(in);
  if (in.peek() != std::char_traits<char>::eof())
    fail(Errc::MalformedImageFile, "trailing data after bit stream");
  return img;
}

ModuleImage read_pbm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoFailure, "cannot open " + path.string());
  return read_pbm(in);
}

}  // namespace qrypt0
