#pragma once

#include <cstdint>

namespace toricdd {

/// SplitMix64: the 64-bit mixer from Steele, Lea and Flood's SplittableRandom.
/// Fully specified here so streams are byte-identical across platforms; never
/// use std::uniform_int_distribution (its mapping is implementation-defined).
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from {0, ..., n-1} by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform over the nonzero integers in [-bound, bound].
    long nonzero_in(long bound) {
        std::uint64_t mag = 1 + below(static_cast<std::uint64_t>(bound));
        return below(2) == 0 ? static_cast<long>(mag) : -static_cast<long>(mag);
    }

    /// Deterministic substream: mixes a parent seed with a stream index.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0xA24BAED4963EE407ull * (index + 1)));
        return SplitMix64(mixer.next());
    }
};

}  // namespace toricdd
