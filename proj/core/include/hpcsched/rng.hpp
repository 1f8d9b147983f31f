#pragma once

#include <array>
#include <cstdint>

namespace hpcsched {

// Trace generation must reproduce bit-identically across platforms and
// languages, so the generator is pinned here instead of delegating to the
// standard library's distributions: xoshiro256++ (Blackman & Vigna), state
// seeded through splitmix64. Uniform doubles take the top 53 bits of one
// 64-bit output.

struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() noexcept {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

class Xoshiro256PlusPlus {
  public:
    explicit Xoshiro256PlusPlus(std::uint64_t seed) noexcept {
        SplitMix64 sm{seed};
        for (auto& word : state_) word = sm.next();
    }

    std::uint64_t next() noexcept {
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

    /// Uniform double in [0, 1).
    double uniform() noexcept { return (next() >> 11) * 0x1.0p-53; }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

/// Stable per-index seed for independent streams (fresh trace per sweep cell).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
    SplitMix64 sm{base ^ (0x9E3779B97F4A7C15ULL * (index + 1))};
    return sm.next();
}

}  // namespace hpcsched
