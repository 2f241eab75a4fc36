#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace slog {

// Engine used everywhere randomness is needed. Reproducibility contract:
// explicit 64-bit seeding, identical streams for identical seeds.
using RngEngine = std::mt19937_64;

// splitmix64 step, used to derive well-separated child seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministically combines a base seed with coordinates (cell indices,
// replicate numbers, ...) into a fresh seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t state = base;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t part : parts) {
        state ^= part + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
        out = splitmix64(state);
    }
    return out;
}

}  // namespace slog
