#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spinqw/rational.hpp"

namespace spinqw {

// Seeded source of small random rationals for polynomial-identity testing.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, std::uint64_t stream = 0);

    // p/d with 1 <= d <= bound and 0 < |p| < d, so the value lies in (-1, 1) \ {0}.
    Rational unit(int bound = 17);
    // Same as unit() but avoiding every value in `avoid`.
    Rational unit_avoiding(const std::vector<Rational>& avoid, int bound = 17);
    std::vector<Rational> distinct_units(int count, const std::vector<Rational>& avoid = {}, int bound = 17);
    int integer(int lo, int hi);

private:
    std::mt19937_64 rng_;
};

} // namespace spinqw
