#pragma once

#include <cstdint>

namespace gallai {

inline uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Counter-based generator: all randomness in the artifact flows from a
// single 64-bit seed, and every consumer derives an independent stream
// from (seed, stream index). Results are therefore independent of
// scheduling and evaluation order, and replay exactly.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t state) : state_(state) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        return mix64(z);
    }

    // Uniform in [0, bound); bound > 0.
    uint64_t next_below(uint64_t bound) {
        // Lemire's multiply-shift with rejection for exact uniformity.
        uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<uint64_t>(m);
        if (lo < bound) {
            uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_double() < p; }

private:
    uint64_t state_;
};

inline SplitMix64 derive_stream(uint64_t seed, uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL)));
}

} // namespace gallai
