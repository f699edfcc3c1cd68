#include "doctest.h"
#include "spinqw/checks.hpp"
#include "spinqw/spin_qw.hpp"
#include "support.hpp"

using namespace spinqw;
using testing::R;

TEST_CASE("one-variable formulas")
{
    Rational q(1, 2), s(1, 3), x(1, 5);
    CHECK(qw_onevar(q, s, x, Partition{1}, Partition()) == R(3, 5));
    Partition mu{3, 1, 1};
    Rational diag(1);
    for (int d : {2, 0, 1}) diag *= q_pochhammer(R(-1) * s * x, q, d) / q_pochhammer(s * s, q, d);
    CHECK(qw_onevar(q, s, x, mu, mu) == diag);
    CHECK(qw_onevar(q, s, R(-1) * s, mu, mu) == R(1));
    for (int i = 1; i <= 4; ++i) {
        Rational xs = scaled_pochhammer(x, s, q, i);
        CHECK(qw_onevar(q, s, x, Partition{i}, Partition()) == xs / q_pochhammer(s * s, q, i));
        CHECK(qw_onevar_dual(q, s, x, Partition{i}, Partition()) == xs / q_pochhammer(q, q, i));
    }
    CHECK(qw_onevar_dual(q, s, x, Partition(), Partition()) == R(1));
    CHECK(qw_onevar(q, s, x, Partition{1, 1}, Partition()) == R(0));
}

TEST_CASE("dual one-variable ratio")
{
    Rational q(2, 7), s(-1, 4), x(3, 5);
    for (const auto& mu : enumerate_partitions(3, 3))
        for (const auto& nu : enumerate_partitions(3, 3)) {
            Rational ratio = conjugate_normalization(q, s, mu) / conjugate_normalization(q, s, nu);
            CHECK(qw_onevar_dual(q, s, x, mu, nu) == ratio * qw_onevar(q, s, x, mu, nu));
        }
}

TEST_CASE("interlacing support")
{
    Rational q(1, 3), s(2, 5), x(-1, 6);
    for (const auto& mu : enumerate_partitions(4, 4))
        for (const auto& nu : enumerate_partitions(4, 4))
            if (qw_onevar(q, s, x, mu, nu) != R(0)) CHECK(interlaces(mu, nu));
}

TEST_CASE("multi-variable polynomials: basic properties")
{
    Rational q(1, 3), s(2, 5);
    std::vector<Rational> x{R(1, 4), R(-2, 7)};
    CHECK(qw_F(q, s, {}, Partition{2, 1}, Partition{2, 1}) == R(1));
    CHECK(qw_F(q, s, {}, Partition(), Partition()) == R(1));
    CHECK(qw_F(q, s, x, Partition{1, 1, 1}) == R(0));
    CHECK(qw_F(q, s, x, Partition{2, 1, 1, 1}, Partition{1}) == R(0));
    CHECK(qw_F(q, s, x, Partition{1}, Partition{2}) == R(0));
    CHECK(qw_F(q, R(0), {x[0]}, Partition{1}) == x[0]);
    CHECK(qw_F_star(q, s, x, Partition()) == R(1));
    for (const auto& lambda : enumerate_partitions(3, 3)) {
        CHECK(qw_F_star(q, s, {x[0]}, lambda) == qw_onevar_dual(q, s, x[0], lambda, Partition()));
        CHECK(qw_F_star(q, s, {x[0]}, lambda, Partition(), Route::Lattice) == qw_onevar_dual(q, s, x[0], lambda, Partition()));
    }
}

TEST_CASE("stability at x = -s")
{
    Rational q(1, 3), s(2, 5);
    std::vector<Rational> x{R(1, 4), R(-2, 7)};
    std::vector<Rational> ext{x[0], x[1], R(-1) * s};
    for (const auto& lambda : enumerate_partitions(3, 3))
        for (const auto& mu : enumerate_partitions(3, 3))
            CHECK(qw_F(q, s, ext, lambda, mu) == qw_F(q, s, x, lambda, mu));
}

TEST_CASE("branching associativity")
{
    Rational q(2, 5), s(-1, 3);
    std::vector<Rational> x{R(1, 4), R(-2, 7), R(3, 8)};
    Partition lambda{3, 2, 1}, mu{1};
    Rational full = qw_F(q, s, x, lambda, mu);
    Rational split12(0), split21(0);
    for (const auto& kappa : enumerate_partitions(3, 3)) {
        split12 += qw_F(q, s, {x[0]}, kappa, mu) * qw_F(q, s, {x[1], x[2]}, lambda, kappa);
        split21 += qw_F(q, s, {x[0], x[1]}, kappa, mu) * qw_F(q, s, {x[2]}, lambda, kappa);
    }
    CHECK(split12 == full);
    CHECK(split21 == full);
}

TEST_CASE("degree in one variable is at most the largest part")
{
    Rational q(1, 3), s(2, 5);
    std::vector<Rational> rest{R(1, 4), R(-2, 7)};
    for (const auto& lambda : enumerate_partitions(3, 3)) {
        int d = lambda.largest();
        auto value = [&](const Rational& t) {
            std::vector<Rational> x{t, rest[0], rest[1]};
            return qw_F(q, s, x, lambda);
        };
        std::vector<Rational> nodes, values;
        for (int i = 0; i <= d; ++i) {
            nodes.push_back(R(i + 1, 7));
            values.push_back(value(nodes.back()));
        }
        Rational probe(-5, 11), interp(0);
        for (int i = 0; i <= d; ++i) {
            Rational basis(1);
            for (int j = 0; j <= d; ++j)
                if (j != i) basis *= (probe - nodes[j]) / (nodes[i] - nodes[j]);
            interp += values[i] * basis;
        }
        CHECK(interp == value(probe));
    }
}

TEST_CASE("route agreement, symmetry and s = 0 reduction")
{
    testing::Points pts(23);
    for (int t = 0; t < 2; ++t) {
        Rational q = pts.next(), s = pts.next();
        auto x = pts.distinct(3);
        IdentityReport routes = check_qw_routes(q, s, x);
        CHECK_MESSAGE(routes.pass, routes.note);
        IdentityReport sym = check_qw_symmetry(q, s, x);
        CHECK_MESSAGE(sym.pass, sym.note);
        IdentityReport s0 = check_s0_reduction(q, {x[0], x[1]});
        CHECK_MESSAGE(s0.pass, s0.note);
    }
}

TEST_CASE("q-Whittaker oracle: one-row values")
{
    Rational q(1, 3), x(2, 5), y(-1, 4);
    CHECK(q_whittaker_classical(q, {x}, Partition{3}) == ipow(x, 3));
    CHECK(q_whittaker_classical(q, {x, y}, Partition{1, 1}) == x * y);
    // P_(2)(x,y;q,0) = x^2 + y^2 + (1+q) xy
    CHECK(q_whittaker_classical(q, {x, y}, Partition{2}) == x * x + y * y + (R(1) + q) * x * y);
}

TEST_CASE("distribution agrees with direct evaluation")
{
    Rational q(1, 3), s(2, 5);
    std::vector<Rational> x{R(1, 4), R(-2, 7)};
    auto dist = qw_distribution(q, s, x, Partition{1}, 5);
    for (const auto& lambda : enumerate_partitions(5, 3, 5)) {
        auto it = dist.find(lambda);
        Rational expected = qw_F(q, s, x, lambda, Partition{1});
        CHECK((it == dist.end() ? R(0) : it->second) == expected);
    }
}
