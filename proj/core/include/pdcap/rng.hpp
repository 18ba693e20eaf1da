// Copyright 2026 The pdcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>

namespace pdcap {

/// xoshiro256** seeded through splitmix64, with in-house uniform and normal
/// transforms. A (seed, restart) pair gives the same stream on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller (one value per call, no caching).
  double normal();

 private:
  std::array<std::uint64_t, 4> s_;
};

std::uint64_t splitmix64(std::uint64_t& state);

// Seed for restart `index` of a search seeded with `base`. Seeds are a pure
// function of (base, index), so restarts can run in any order.
std::uint64_t restart_seed(std::uint64_t base, std::uint64_t index);

}  // namespace pdcap
