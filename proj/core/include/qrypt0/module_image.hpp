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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace qrypt0 {

/// Rectangular grid of dark (true) / light (false) modules, row-major.
class ModuleGrid {
 public:
  ModuleGrid() = default;
  ModuleGrid(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool get(int x, int y) const { return cells_.at(index(x, y)) != 0; }
  void set(int x, int y, bool dark) { cells_.at(index(x, y)) = dark ? 1 : 0; }
  void flip(int x, int y) { cells_.at(index(x, y)) ^= 1; }
  bool in_bounds(int x, int y) const noexcept {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  friend bool operator==(const ModuleGrid&, const ModuleGrid&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// An image as exchanged between machines: the symbol plus quiet zone,
/// one grid cell per image pixel.
using ModuleImage = ModuleGrid;

// Plain PBM ("P1"), dark = 1. Writers emit at most 70 characters per line.
void write_pbm(const ModuleImage& img, std::ostream& out);
void write_pbm(const ModuleImage& img, const std::filesystem::path& path);
ModuleImage read_pbm(std::istream& in);
ModuleImage read_pbm(const std::filesystem::path& path);

}  // namespace qrypt0
