#include "spinqw/random.hpp"

#include <algorithm>

namespace spinqw {

RationalSampler::RationalSampler(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    rng_.seed(seq);
}

int RationalSampler::integer(int lo, int hi)
{
    // Plain modular reduction keeps the stream identical across standard libraries.
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
}

Rational RationalSampler::unit(int bound)
{
    int den = integer(2, bound);
    int num = integer(1, den - 1);
    if (integer(0, 1)) num = -num;
    return Rational(num, den);
}

Rational RationalSampler::unit_avoiding(const std::vector<Rational>& avoid, int bound)
{
    for (;;) {
        Rational r = unit(bound);
        if (std::find(avoid.begin(), avoid.end(), r) == avoid.end()) return r;
    }
}

std::vector<Rational> RationalSampler::distinct_units(int count, const std::vector<Rational>& avoid, int bound)
{
    std::vector<Rational> used = avoid, out;
    for (int i = 0; i < count; ++i) {
        Rational r = unit_avoiding(used, bound);
        used.push_back(r);
        out.push_back(r);
    }
    return out;
}

} // namespace spinqw
