#pragma once

#include <cstdint>
#include <random>

namespace loopcut::rng {

// All randomness in this project flows through std::mt19937_64 (the engine's
// output sequence is pinned by the C++ standard) plus the helpers below.
// Standard-library *distributions* are implementation-defined, so we never use
// them; this keeps generated graphs and reports bit-identical across
// platforms and standard libraries.

using Engine = std::mt19937_64;

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Per-trial seed derivation: step the splitmix64 stream seeded by `master`
// forward `index + 1` times. Independent streams for parallel trials.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master + index * 0x9E3779B97F4A7C15ULL);
}

// Uniform double in [0, 1) using the top 53 bits of one engine draw.
inline double unit_double(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection from the high bits. `bound` > 0.
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace loopcut::rng
