#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace sensegen {

/// Deterministic seeded random source (xoshiro256** seeded via splitmix64).
///
/// The generator identity is part of the output contract: the same seed
/// yields the same draw sequence on every run of this implementation.
/// Cross-implementation bit-equality is not promised.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {
        // splitmix64 expansion of the 64-bit seed into xoshiro state
        std::uint64_t x = seed;
        for (auto& w : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        auto rotl = [](std::uint64_t v, int k) {
            return (v << k) | (v >> (64 - k));
        };
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform real in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal deviate via Box-Muller (two uniforms per call, no
    /// cached spare, so the draw count per call is fixed).
    double normal() {
        const double u1 =
            (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
        const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    }

    /// Uniform integer in [0, n). Unbiased via rejection.
    std::uint64_t uniform_int(std::uint64_t n) {
        const std::uint64_t rem =
            (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
        const std::uint64_t threshold =
            std::numeric_limits<std::uint64_t>::max() - rem;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x > threshold);
        return x % n;
    }

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
};

}  // namespace sensegen
