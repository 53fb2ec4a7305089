#pragma once

#include <cstdint>
#include <random>

namespace splitdiam {

// Deterministic random source for the instance generators.
//
// std::mt19937_64 produces a fully specified bit stream for a given seed, so
// generated instances are reproducible across compilers and platforms. The
// bounded draws below are implemented here because the standard
// <random> distributions are implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), bound > 0. Rejection sampling, so the result is
    // exactly uniform and depends only on the engine stream.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = eng_();
        while (x >= limit) x = eng_();
        return x % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace splitdiam
