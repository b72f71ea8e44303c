#pragma once

#include <cstdint>
#include <random>

namespace splitsim {

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// implementation-defined std:: distributions so streams match across platforms.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer, used to spread user seeds over the generator state.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(mix_seed(seed)); }

/// Uniform double in the open interval (0, 1).
inline double uniform_open01(Rng& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace splitsim
