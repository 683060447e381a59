#pragma once

#include <cstdint>

namespace supertriv {

// Multiplicative congruential generator on 64 bits (odd state, high output
// bits). Small, documented, and reproducible across platforms; every
// verification report records the seed it was run with.
struct Mcg64 {
    std::uint64_t state;

    explicit Mcg64(std::uint64_t seed) : state(seed | 1) {}

    std::uint64_t next() {
        state *= 0xf1357aea2e62a9c5ULL;
        return state >> 8;
    }

    // Uniform-ish in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // Uniform-ish integer in [lo, hi].
    long long range(long long lo, long long hi) {
        return lo + (long long)below(std::uint64_t(hi - lo + 1));
    }
};

} // namespace supertriv
