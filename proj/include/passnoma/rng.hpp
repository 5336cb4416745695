#pragma once

// Deterministic pseudo-random machinery for the Monte Carlo engine.
//
// The generator is xoshiro256++ (Blackman & Vigna), seeded through SplitMix64 so
// that any 64-bit value expands into a full, well-mixed 256-bit state. Every
// simulated metric/SNR-point pair runs on its own substream derived from
// (master seed, sweep-point index, metric identifier), which makes each CSV row
// independently reproducible and keeps rows statistically uncorrelated.

#include <array>
#include <cstdint>
#include <string_view>

namespace passnoma {

// SplitMix64 finalizer as a stateless 64-bit mixing bijection.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Sequential SplitMix64 stream, used only to expand seeds.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// FNV-1a 64-bit hash, used to fold metric identifiers into substream seeds.
inline constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : text) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derives the per-(metric, sweep-point) substream seed from the master seed.
inline constexpr std::uint64_t derive_substream(std::uint64_t master_seed,
                                                std::uint64_t point_index,
                                                std::string_view metric_id) noexcept {
  return mix64(mix64(mix64(master_seed) ^ fnv1a64(metric_id)) ^ point_index);
}

// xoshiro256++ — fast, high-quality 256-bit state generator.
class Xoshiro256pp {
 public:
  explicit constexpr Xoshiro256pp(std::uint64_t seed) noexcept : s_{} {
    SplitMix64 seeder(seed);
    for (auto& word : s_) {
      word = seeder.next();
    }
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
      s_[0] = 0x9e3779b97f4a7c15ULL;  // all-zero state is the one forbidden point
    }
  }

  constexpr std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_;
};

}  // namespace passnoma
