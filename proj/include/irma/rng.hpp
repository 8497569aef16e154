// Copyright 2026 The irma Authors
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

#ifndef IRMA_RNG_HPP_
#define IRMA_RNG_HPP_

#include <cstdint>

namespace irma {

// Counter-based SplitMix64 stream. Output i is the SplitMix64 finalizer
// applied to seed + (i+1) * golden-ratio increment, so the sequence is a pure
// function of (seed, i) and identical on every platform. All distributions
// below use integer arithmetic (or a single IEEE multiply) and are therefore
// bit-stable as well; std::random distributions are deliberately avoided.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform in [0, n), n > 0. Lemire multiply-shift with rejection.
  std::uint64_t next_below(std::uint64_t n) noexcept {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t t = -n % n;
      while (lo < t) {
        m = static_cast<unsigned __int128>(next_u64()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // True with probability p. Integer threshold compare on the top 53 bits.
  bool bernoulli(double p) noexcept {
    if (p <= 0.0) {
      next_u64();
      return false;
    }
    if (p >= 1.0) {
      next_u64();
      return true;
    }
    const auto threshold = static_cast<std::uint64_t>(p * 0x1.0p53);
    return (next_u64() >> 11) < threshold;
  }

  // Independent substream seed. Double mixing keeps derived seeds away from
  // the arithmetic progression of states the parent stream walks through.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t tag) noexcept {
    return mix(mix(seed) ^ mix(tag ^ 0xd2b74407b1ce6e93ull));
  }

  static std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace irma

#endif  // IRMA_RNG_HPP_
