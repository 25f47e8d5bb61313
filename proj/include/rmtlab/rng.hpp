// Copyright 2026 The rmtlab Authors
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

#include <cstdint>
#include <random>
#include <string_view>

namespace rmtlab {

using Rng = std::mt19937_64;

/// Purpose tags separating the random streams used inside one realization.
enum class StreamTag : std::uint64_t {
  Hamiltonian = 1,
  Perturbation = 2,
  Coupling = 3,
  EnvState = 4,
  QubitState = 5,
  State = 6,
  Phases = 7,
  Generic = 8,
};

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the substream (seed, index, tag). Depends only on its arguments,
/// so realizations can be drawn in any order or concurrently.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index,
                                       StreamTag tag = StreamTag::Generic) noexcept {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ mix64(index + 0x632be59bd9b4e019ULL));
  h = mix64(h ^ (static_cast<std::uint64_t>(tag) * 0x8cb92ba72f3d8dd7ULL));
  return h;
}

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

}  // namespace rmtlab
