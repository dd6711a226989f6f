#pragma once

#include <cstdint>
#include <stdexcept>

namespace hamspec {

// SplitMix64: tiny, fast, and identical on every platform, which std::mt19937
// distributions are not. Campaign reports must be byte-reproducible from the
// seed alone, so all harness randomness flows through this.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return mix(state += 0x9e3779b97f4a7c15ull); }

    // Independent stream for one work item; lets items run in any order (or in
    // parallel) without changing what each one draws.
    static SplitMix64 derive(std::uint64_t seed, std::uint64_t item) {
        return SplitMix64(mix(seed) ^ mix(item * 0x9e3779b97f4a7c15ull + 0x517cc1b727220a95ull));
    }

    // Uniform in [0, bound) by rejection, bias-free.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below(0)");
        std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace hamspec
