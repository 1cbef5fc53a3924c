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

#include "qrypt0/crypto_suite.hpp"

namespace {

const qrypt0::ChannelKeys& keys() {
  static const qrypt0::ChannelKeys k = qrypt0::derive_keys("benchmark passphrase", "bench");
  return k;
}

qrypt0::Envelope envelope() {
  qrypt0::Envelope e;
  e.msg_number = 7;
  e.timestamp = 1760000000;
  e.body.assign(1000, 0x41);
  return e;
}

void BM_Seal(benchmark::State& state) {
  const auto e = envelope();
  for (auto _ : state) benchmark::DoNotOptimize(qrypt0::seal(e, keys()));
}
BENCHMARK(BM_Seal);

void BM_Open(benchmark::State& state) {
  const auto frame = qrypt0::seal(envelope(), keys());
  for (auto _ : state)
    benchmark::DoNotOptimize(qrypt0::open(frame, keys(), qrypt0::Profile::Full));
}
BENCHMARK(BM_Open);

void BM_DeriveKeys(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qrypt0::derive_keys("benchmark passphrase", "bench"));
}
BENCHMARK(BM_DeriveKeys)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
