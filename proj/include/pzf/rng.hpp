#pragma once

#include <cstdint>

namespace pzf {

// Counter-based random draws: every value is a pure function of its key, so
// parallel simulations are reproducible regardless of scheduling and the
// same (seed, trial, round, vertex) tuple always yields the same draw.

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

inline std::uint64_t hash4(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                           std::uint64_t d) {
    constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ull;
    std::uint64_t h = mix64(a + golden);
    h = mix64(h ^ (b + golden));
    h = mix64(h ^ (c + golden));
    h = mix64(h ^ (d + golden));
    return h;
}

// Uniform in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                        std::uint64_t d) {
    return static_cast<double>(hash4(a, b, c, d) >> 11) * 0x1.0p-53;
}

// Stream tags keep unrelated consumers of the same seed independent.
enum : std::uint64_t {
    kStreamTrial = 1,
    kStreamGnp = 2,
    kStreamScan = 3,
};

}  // namespace pzf
