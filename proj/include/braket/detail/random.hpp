#pragma once

#include <cstdint>
#include <random>

namespace braket::detail {

// All seeded randomness in the library goes through this engine so that a
// (seed, call sequence) pair is reproducible within a build.
using Engine = std::mt19937_64;
inline constexpr const char* kEngineName = "mt19937_64";

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Engine& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Unbiased integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Engine& rng, std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = rng();
        if (r >= limit) return r % bound;
    }
}

}  // namespace braket::detail
