#pragma once

#include <cstdint>
#include <random>

namespace tancat {

// Deterministic generator for the seeded axiom checkers. Raw draws with
// modulo (rather than <random> distributions) keep streams byte-identical
// across standard libraries; mt19937_64 itself is pinned by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    // Inclusive range.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace tancat
