// Copyright 2026 The sidelink-match Authors
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

#ifndef SIDELINK_RNG_HPP
#define SIDELINK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sidelink {

// SplitMix64 step (Steele, Lea, Flood 2014). Used for stream derivation
// and for seeding the main generator.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic, platform-independent random stream: xoshiro256++
// (Blackman & Vigna 2019) seeded through SplitMix64.
//
// Sub-streams are derived as in SplitMix64's split(): stream `k` of seed
// `s` starts the seeding sequence at state s + (k + 1) * golden-gamma, so
// (seed, stream) pairs map to disjoint, uncorrelated generators. Every
// consumer of randomness owns a (seed, stream) pair, which is what makes
// parallel trial execution reproduce the sequential results exactly.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t sm = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, n). Rejection sampling on the top of
  // the 64-bit range keeps the distribution exact for every n.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  // Standard normal via Box-Muller. No caching of the paired value: each
  // call consumes exactly two uniforms, so call sites stay reproducible
  // independent of interleaving.
  double next_normal(double mean, double stddev) {
    double u1 = 1.0 - next_double();  // (0, 1], keeps log() finite
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Fixed sub-stream roles per Monte Carlo trial. Trial t of master seed s
// uses RngStream(s, t * kStreamsPerTrial + role).
enum TrialStreamRole : std::uint64_t {
  kInstanceStream = 0,
  kRandomBaselineStream = 1,
  kGreedyOrderStream = 2,
};
inline constexpr std::uint64_t kStreamsPerTrial = 4;

inline RngStream trial_stream(std::uint64_t seed, std::uint64_t trial,
                              TrialStreamRole role) {
  return RngStream(seed, trial * kStreamsPerTrial + role);
}

}  // namespace sidelink

#endif  // SIDELINK_RNG_HPP
