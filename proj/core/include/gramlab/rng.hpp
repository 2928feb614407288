// Copyright 2026 The Gramlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Counter-based random numbers: every draw is a pure function of
// (root_seed, stream_index, counter), so substreams are reproducible and
// independent of thread scheduling.

#include <cmath>
#include <cstdint>

namespace gramlab {

struct SampleStream {
  std::uint64_t root_seed = 0;
  std::uint64_t stream_index = 0;

  SampleStream substream(std::uint64_t offset) const {
    return SampleStream{root_seed, stream_index + offset};
  }
};

namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t stream_key(const SampleStream& s) {
  return splitmix64(splitmix64(s.root_seed) ^
                    (0x9e3779b97f4a7c15ULL * (s.stream_index + 0x2545f4914f6cdd1dULL)));
}

inline std::uint64_t bits(std::uint64_t key, std::uint64_t counter) {
  return splitmix64(key ^ splitmix64(counter * 0xda942042e4dd58b5ULL + 0x9e3779b97f4a7c15ULL));
}

/// Uniform on the open interval (0,1).
inline double uniform01(std::uint64_t key, std::uint64_t counter) {
  return (static_cast<double>(bits(key, counter) >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal draw; consumes counters 2c and 2c+1 (Box-Muller).
inline double normal(std::uint64_t key, std::uint64_t counter) {
  const double u1 = uniform01(key, 2 * counter);
  const double u2 = uniform01(key, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

}  // namespace rng
}  // namespace gramlab
