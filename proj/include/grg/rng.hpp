// Copyright 2026 The grgcycles Authors
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

#ifndef GRG_RNG_HPP_
#define GRG_RNG_HPP_

#include <cstdint>
#include <random>

namespace grg {

using Seed = std::uint64_t;

// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed splitting: the child seed for `index` under `parent` is
// splitmix64(parent + (index + 1) * 0x9E3779B97F4A7C15), i.e. the
// (index + 1)-th output of a SplitMix64 stream started at `parent`.
// Replications are seeded with derive_seed(master, r), so the result of
// a replication never depends on which worker ran it.
Seed derive_seed(Seed parent, std::uint64_t index) noexcept;

// Sub-streams of one replication.
inline constexpr std::uint64_t kWeightStream = 0;
inline constexpr std::uint64_t kGraphStream = 1;

// 64-bit Mersenne twister with explicit, portable conversions to reals.
// std::uniform_real_distribution is implementation-defined, so it is
// not used anywhere a bit stream has to be reproducible.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform_open() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace grg

#endif  // GRG_RNG_HPP_
