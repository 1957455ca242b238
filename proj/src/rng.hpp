#pragma once

#include <cstdint>
#include <random>

namespace gcdval {

// Deterministic generator with hand-rolled rejection sampling: identical
// sequences on every platform for a given seed (std distributions are
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, n), n >= 1, unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace gcdval
