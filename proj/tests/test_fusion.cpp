#include <cmath>

#include "doctest.h"
#include "spinqw/checks.hpp"
#include "spinqw/fusion.hpp"
#include "support.hpp"

using namespace spinqw;
using testing::R;

TEST_CASE("spin-1 fusion is the unfused weight")
{
    Rational q(1, 3), s(2, 5), u(-1, 4);
    for (int i = 0; i <= 3; ++i)
        for (int k = 0; k <= 3; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l)
                    CHECK(fused_weight_bruteforce(q, s, u, 1, i, j, k, l) == weight_unfused(q, s, u, i, j, k, l));
    CHECK(fused_weight_bruteforce(q, s, u, 3, 0, 0, 0, 0) == R(1));
    CHECK(fused_weight_bruteforce(q, s, u, 2, 1, 1, 1, 1) == fused_weight_formula(q, s, u, 2, 1, 1, 1, 1));
    CHECK(fusion_normalization(q, 0, 3) == R(1));
}

TEST_CASE("three fusion routes agree")
{
    testing::Points pts(5);
    for (int t = 0; t < 5; ++t) {
        Rational q = pts.next(), s = pts.next(), u = pts.next();
        IdentityReport r = check_fusion_routes(q, s, u);
        CHECK_MESSAGE(r.pass, r.note);
    }
}

TEST_CASE("closed formula at u = s")
{
    Rational q(2, 7), s(-3, 5);
    for (int J = 1; J <= 3; ++J)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= J; ++j)
                for (int l = 0; l <= J; ++l) {
                    int k = i + j - l;
                    if (k < 0) continue;
                    CHECK(fused_weight_formula(q, s, s, J, i, j, k, l) == weight_at_u_equals_s(q, s, J, i, j, k, l));
                }
}

TEST_CASE("continued weights")
{
    Rational q(1, 2), s(1, 3), x(-2, 7);
    CHECK(weight_W(q, s, x, 0, 0, 0, 0) == R(1));
    CHECK(weight_W(q, s, x, 1, 0, 0, 1) == (x + s) / (R(1) - q));
    CHECK(weight_W(q, s, x, 1, 2, 0, 3) == R(0));
    CHECK(weight_W(q, s, x, 2, 1, 2, 1) != R(0));
    CHECK(weight_W(q, s, R(0), 1, 0, 0, 1) == s / (R(1) - q));
    CHECK(weight_W_dual(q, s, x, 0, 0, 0, 0) == R(1));
    CHECK(weight_W_dual(q, s, x, 1, 1, 1, 0) == R(0));
    IdentityReport r = check_gauge(q, s, R(1, 5), x);
    CHECK_MESSAGE(r.pass, r.note);
    testing::Points pts(8);
    for (int t = 0; t < 5; ++t) CHECK(check_gauge(pts.next(), pts.next(), pts.next(), pts.next()).pass);
}

TEST_CASE("integer spin specialisation of the continued weight")
{
    Rational q(1, 3), s(-2, 5);
    for (int J = 1; J <= 4; ++J) {
        Rational x = R(-1) * s * ipow(q, J);
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= J; ++j)
                for (int l = 0; l <= J; ++l) {
                    int k = i + j - l;
                    if (k < 0) continue;
                    CHECK(weight_W(q, s, x, i, j, k, l) == weight_at_u_equals_s(q, s, J, i, j, k, l));
                    CHECK(weight_W(q, s, x, i, j, k, l) == fused_weight_bruteforce(q, s, s, J, i, j, k, l));
                }
    }
}

TEST_CASE("column sums follow the q-binomial theorem")
{
    // sum_i t^i sum_l W_x(i,0;i-l,l) (s^2;q)_{i-l}/(q;q)_{i-l} = (-st;q)(-sxt;q)/((xt;q)(t;q)) at infinity
    double q = 0.35, s = 0.4, x = -0.45, t = 0.3;
    double lhs = 0.0;
    for (int i = 0; i <= 80; ++i) {
        double col = 0.0;
        for (int l = 0; l <= i; ++l)
            col += weight_W(q, s, x, i, 0, i - l, l) * q_pochhammer(s * s, q, i - l) / q_pochhammer(q, q, i - l);
        lhs += std::pow(t, i) * col;
    }
    double rhs = q_pochhammer_inf(-s * t, q) * q_pochhammer_inf(-s * x * t, q) /
                 (q_pochhammer_inf(x * t, q) * q_pochhammer_inf(t, q));
    CHECK(std::fabs(lhs - rhs) < 1e-12);
}

TEST_CASE("fused R-matrix")
{
    Rational q(1, 3), s(2, 5), x(-1, 4), y(3, 7);
    CHECK(r_matrix_fused(q, s, x, y, 0, 0, 0, 0) == R(1));
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
            for (int l = 0; l <= 3; ++l) {
                int k = i + j - l;
                if (k < 0) continue;
                if (i > l) CHECK(r_matrix_fused(q, s, x, x, i, j, k, l) == R(0));
            }
    for (int J = 1; J <= 3; ++J)
        for (int I = 1; I <= 3; ++I) {
            Rational xj = R(-1) * s * ipow(q, J), yi = R(-1) * s * ipow(q, I);
            for (int i = 0; i <= I; ++i)
                for (int j = 0; j <= J; ++j)
                    for (int l = 0; l <= J; ++l) {
                        int k = i + j - l;
                        if (k < 0 || k > I) continue;
                        CHECK(r_matrix_fused(q, s, xj, yi, i, j, k, l) == r_matrix_fused_integer(q, J, I, i, j, k, l));
                    }
        }
}

TEST_CASE("fused Yang-Baxter equation")
{
    testing::Points pts(13);
    for (int t = 0; t < 5; ++t) {
        Rational q = pts.next(), s = pts.next();
        auto xy = pts.distinct(2);
        IdentityReport r = check_fused_ybe(q, s, xy[0], xy[1]);
        CHECK_MESSAGE(r.pass, r.note);
    }
    CHECK(fused_ybe_check(R(1, 3), R(2, 5), R(-1, 4), R(3, 7), {0, 0, 0}, {0, 0, 0}));
}

TEST_CASE("fused Yang-Baxter negative controls")
{
    Rational q(1, 3), s(2, 5), x(-1, 4), y(3, 7);
    IdentityReport mutated = check_fused_ybe(q, s, x, y, 2, FusedYbeForm::Corrected, Mutation<Rational>{{1, 1, 1, 1}, R(3, 2)});
    CHECK_FALSE(mutated.pass);
    // the relation with R_{x,y} in place of R_{y,x} does not hold at generic points
    IdentityReport printed = check_fused_ybe(q, s, x, y, 2, FusedYbeForm::AsPrinted);
    CHECK_FALSE(printed.pass);
}

TEST_CASE("integer-spin fused YBE holds with the spin order of the R-matrix matching its index ranges")
{
    Rational q(2, 5), s(-1, 3);
    for (int J1 = 1; J1 <= 2; ++J1)
        for (int J2 = J1; J2 <= 2; ++J2) {
            auto w1 = [&](int a, int b, int c, int d) { return weight_at_u_equals_s(q, s, J1, a, b, c, d); };
            auto w2 = [&](int a, int b, int c, int d) { return weight_at_u_equals_s(q, s, J2, a, b, c, d); };
            bool all = true;
            for (int code = 0; code < 729; ++code) {
                int c = code;
                std::array<int, 6> d{};
                for (auto& v : d) v = c % 3, c /= 3;
                if (d[0] > J1 || d[3] > J1 || d[1] > J2 || d[4] > J2) continue;
                Rational lhs(0), rhs(0);
                for (int k1 = 0; k1 <= J1; ++k1)
                    for (int k2 = 0; k2 <= J2; ++k2)
                        for (int k3 = 0; k3 <= 8; ++k3) {
                            lhs += r_matrix_fused_integer(q, J1, J2, d[1], d[0], k2, k1) * w1(d[2], k1, k3, d[3]) *
                                   w2(k3, k2, d[5], d[4]);
                            rhs += w2(d[2], d[1], k3, k2) * w1(k3, d[0], d[5], k1) *
                                   r_matrix_fused_integer(q, J1, J2, k2, k1, d[4], d[3]);
                        }
                all = all && lhs == rhs;
            }
            CHECK(all);
        }
}

TEST_CASE("horizontal concatenation of fused columns")
{
    Rational q(1, 3), s(-2, 7), u(2, 5);
    int J = 2;
    for (int b0 = 0; b0 <= 2; ++b0)
        for (int b1 = 0; b1 <= 2; ++b1)
            for (int t0 = 0; t0 <= 2; ++t0)
                for (int t1 = 0; t1 <= 2; ++t1)
                    for (int j = 0; j <= J; ++j)
                        for (int l = 0; l <= J; ++l) {
                            auto [fused, unfused] = concatenation_sides(q, s, u, J, {b0, b1}, {t0, t1}, j, l);
                            CHECK(fused == unfused);
                        }
}
