// Copyright 2026 The cvforge Authors
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

#ifndef CVFORGE_COMMON_RNG_HPP_
#define CVFORGE_COMMON_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>

namespace cvforge {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based random stream: draw i is a pure function of (key, i), so a
// stream can be split per environment or per seed without shared state.
class CounterStream {
 public:
  CounterStream() = default;
  explicit CounterStream(std::uint64_t key, std::uint64_t counter = 0)
      : key_(mix64(key)), counter_(counter) {}

  static CounterStream derive(std::uint64_t seed, std::uint64_t stream_id) {
    return CounterStream(mix64(seed) ^ mix64(stream_id ^ 0x5851f42d4c957f2dULL));
  }

  std::uint64_t next_u64() { return mix64(key_ ^ mix64(counter_++)); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }
  void set_counter(std::uint64_t c) { counter_ = c; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace cvforge

#endif  // CVFORGE_COMMON_RNG_HPP_
