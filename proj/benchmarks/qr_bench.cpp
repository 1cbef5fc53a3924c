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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qrypt0/qr_codec.hpp"

namespace {

std::vector<std::uint8_t> payload(std::size_t n) {
  std::mt19937 rng(10);
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(rng());
  return v;
}

void BM_QrEncode(benchmark::State& state) {
  const auto data = payload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qrypt0::qr::encode(data));
}
BENCHMARK(BM_QrEncode)->Arg(1452)->Arg(2932)->Unit(benchmark::kMillisecond);

void BM_QrDecode(benchmark::State& state) {
  const auto image =
      qrypt0::qr::render(qrypt0::qr::encode(payload(static_cast<std::size_t>(state.range(0)))),
                         static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qrypt0::qr::decode(image));
}
BENCHMARK(BM_QrDecode)->Args({1452, 1})->Args({2932, 1})->Args({2932, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace
