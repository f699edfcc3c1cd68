#include <algorithm>

#include "doctest.h"
#include "spinqw/checks.hpp"
#include "spinqw/spin_hl.hpp"
#include "support.hpp"

using namespace spinqw;
using testing::R;

TEST_CASE("F on the all-zero partition")
{
    Rational q(1, 2), s(1, 3);
    std::vector<Rational> u{R(1, 4), R(1, 5), R(-2, 9)};
    for (int l = 1; l <= 3; ++l) {
        std::vector<Rational> sp(u.begin(), u.begin() + l);
        Rational expected = q_pochhammer(q, q, l);
        for (const auto& x : sp) expected /= R(1) - s * x;
        CHECK(hl_F(q, s, sp, Partition(std::vector<int>(l, 0))) == expected);
    }
    CHECK(hl_F(q, s, {u[0], u[1]}, Partition{0, 0}) == R(135, 308));
    CHECK(hl_F(q, s, {}, Partition{2, 1}, Partition{2, 1}) == R(1));
    CHECK_THROWS_AS(hl_F(q, s, {u[0]}, Partition{1, 0}), PreconditionError);
}

TEST_CASE("F for a single path")
{
    Rational q(2, 7), s(-1, 3), u(3, 5);
    // the path enters at column 0, crosses it and turns up at column 1
    Rational expected = weight_unfused(q, s, u, 0, 1, 0, 1) * weight_unfused(q, s, u, 0, 1, 1, 0);
    CHECK(hl_F(q, s, {u}, Partition{1}) == expected);
    CHECK(hl_F(q, s, {u}, Partition{1, 1}, Partition{2}) == R(0));
}

TEST_CASE("G and G*")
{
    Rational q(1, 3), s(2, 5), v(-3, 7);
    CHECK(hl_G(q, s, std::vector<Rational>{}, Partition{2, 1, 0}, Partition{2, 1, 0}) == R(1));
    CHECK(hl_G(q, s, {v}, Partition()) == R(1));
    CHECK(hl_G_star(q, s, {v, R(1, 2)}, Partition(), Partition()) == R(1));
    Partition lambda{2, 1, 0}, mu{1, 0, 0};
    auto fam = unfused_family(q, s, v);
    CHECK(hl_G(q, s, {v}, lambda, mu) == row_value(fam, occupation_state(mu), occupation_state(lambda), 0, 0));
    CHECK(hl_G_star(q, s, {v}, lambda, mu) == hl_G_star_lattice(q, s, {v}, lambda, mu));
    Partition zero{0, 0, 0};
    CHECK(normalization_c(q, s, zero) == R(1));
    CHECK(hl_G_star(q, s, {v}, lambda, zero) == normalization_c(q, s, lambda) * hl_G(q, s, {v}, lambda, zero));
    CHECK_THROWS_AS(hl_G(q, s, {v}, Partition{1, 0}, Partition{0}), PreconditionError);
}

TEST_CASE("stable functions: small cases")
{
    Rational q(1, 2), s(1, 3), u(-2, 5);
    CHECK(stable_F(q, s, {u, R(1, 7)}, Partition()) == R(1));
    CHECK(stable_F(q, s, {u}, Partition{1}) == (R(1) - q) * u / (R(1) - s * u));
    CHECK(stable_F_symmetrization(q, s, {u}, Partition()) == R(1));
    CHECK(stable_F_symmetrization(q, s, {u}, Partition{1}) == (R(1) - q) * u / (R(1) - s * u));
    std::vector<Rational> two{R(1, 4), R(-3, 7)};
    CHECK(stable_F(q, s, two, Partition{2, 1}) == stable_F_symmetrization(q, s, two, Partition{2, 1}));
    CHECK(normalization_c_tilde(q, s, Partition{1}) == (R(1) - s * s) / (R(1) - q));
    CHECK(stable_F_star(q, s, {u}, Partition{1}) == (R(1) - s * s) * u / (R(1) - s * u));
    CHECK(stable_F_star_lattice(q, s, {u}, Partition{1}) == (R(1) - s * s) * u / (R(1) - s * u));
    CHECK(stable_F_star(q, s, {u}, Partition()) == R(1));
    CHECK_THROWS_AS(stable_F_symmetrization(q, s, {u, u}, Partition{1}), DivisionByZero);
}

TEST_CASE("stability under a zero spectral parameter")
{
    Rational q(1, 3), s(-2, 5);
    std::vector<Rational> u{R(1, 4), R(2, 7)};
    std::vector<Rational> padded{u[0], u[1], R(0)};
    for (const auto& lambda : enumerate_partitions(3, 2)) CHECK(stable_F(q, s, padded, lambda) == stable_F(q, s, u, lambda));
}

TEST_CASE("s = 0 gives Hall-Littlewood Q and P")
{
    Rational q(1, 3), s(0), u(2, 5), v(-1, 4);
    for (int r = 1; r <= 3; ++r) {
        CHECK(stable_F(q, s, {u}, Partition{r}) == (R(1) - q) * ipow(u, r));
        CHECK(stable_F_star(q, s, {u}, Partition{r}) == ipow(u, r));
    }
    CHECK(stable_F(q, s, {u, v}, Partition{1, 1}) == (R(1) - q) * (R(1) - q * q) * u * v);
    CHECK(stable_F_star(q, s, {u, v}, Partition{1, 1}) == u * v);
    CHECK(stable_F_star(q, s, {u, v}, Partition{2}) == u * u + v * v + (R(1) - q) * u * v);
}

TEST_CASE("permutation symmetry of F, G and the stable functions")
{
    testing::Points pts(17);
    for (int t = 0; t < 5; ++t) {
        Rational q = pts.next(), s = pts.next();
        auto u = pts.distinct(3);
        std::vector<Rational> perm = u;
        std::next_permutation(perm.begin(), perm.end());
        std::vector<Rational> rev(u.rbegin(), u.rend());
        for (const auto& lambda : enumerate_partitions(3, 3)) {
            CHECK(stable_F(q, s, u, lambda) == stable_F(q, s, perm, lambda));
            CHECK(stable_F(q, s, u, lambda) == stable_F(q, s, rev, lambda));
            Partition full = lambda.padded(3);
            CHECK(hl_G(q, s, u, full) == hl_G(q, s, rev, full));
        }
        for (const auto& lambda : partitions_with_size(3, 3)) {
            CHECK(hl_F(q, s, u, lambda) == hl_F(q, s, perm, lambda));
            CHECK(hl_F(q, s, u, lambda) == hl_F(q, s, rev, lambda));
        }
    }
}

TEST_CASE("route agreement on the (3,3) box")
{
    testing::Points pts(19);
    for (int t = 0; t < 2; ++t) {
        Rational q = pts.next(), s = pts.next();
        auto u = pts.distinct(3, {s});
        IdentityReport r = check_stable_routes(q, s, u);
        CHECK_MESSAGE(r.pass, r.note);
    }
}
