#pragma once

#include <cstdint>

#include "kohn/rational.hpp"

namespace kohn {

// Deterministic counter-based random source (splitmix64).  The same seed
// always yields the same sequence of draws, independent of platform, so
// every "generic" choice in the pipeline is reproducible.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next() {
        std::uint64_t z = seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; bias is irrelevant for genericity.
    long int_in(long lo, long hi) {
        if (hi < lo) return lo;
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Integer coefficient in [-bound, bound], as an exact rational.
    Rat coefficient(long bound) { return make_rat(int_in(-bound, bound)); }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace kohn
