#pragma once

#include <cstdint>

namespace elementum {

// splitmix64: tiny, fast, and identical on every platform we build for
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform over {0, ..., n-1}, unbiased via rejection
    int below(int n) {
        const std::uint64_t span = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0 - span) % span;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return static_cast<int>(r % span);
        }
    }
};

} // namespace elementum
