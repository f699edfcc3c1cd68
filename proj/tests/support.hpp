#pragma once

#include <vector>

#include "spinqw/random.hpp"
#include "spinqw/rational.hpp"

namespace testing {

using spinqw::Rational;

inline Rational R(long p, long q = 1)
{
    return Rational(p, q);
}

// Deterministic parameter points for property tests.
struct Points {
    spinqw::RationalSampler sampler;
    explicit Points(std::uint64_t seed) : sampler(seed) {}
    Rational next() { return sampler.unit(); }
    std::vector<Rational> distinct(int n, const std::vector<Rational>& avoid = {})
    {
        return sampler.distinct_units(n, avoid);
    }
};

} // namespace testing
