// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "spinqw/checks.hpp"
#include "spinqw/contour.hpp"
#include "spinqw/identities.hpp"
#include "spinqw/random.hpp"

using namespace spinqw;

namespace {

constexpr std::uint64_t kSeed = 20240607;
constexpr double kNumericTol = 1e-10;
constexpr double kIntegralTol = 1e-8;
constexpr double kRadiusTol = 1e-9;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Tracks the first failing report so the summary line can name it.
struct Collector {
    int total = 0, held = 0;
    std::string first_failure;
    double worst = 0.0;

    void add(const IdentityReport& r)
    {
        ++total;
        worst = std::max(worst, r.rel_dev);
        if (r.pass) {
            ++held;
        } else if (first_failure.empty()) {
            first_failure = r.name + (r.note.empty() ? "" : " (" + r.note + ")");
        }
    }
    void expect(bool ok, const std::string& what)
    {
        ++total;
        if (ok)
            ++held;
        else if (first_failure.empty())
            first_failure = what;
    }
    Outcome outcome() const
    {
        std::ostringstream out;
        out << held << "/" << total << " checks";
        if (worst > 0) out << ", max rel_dev " << worst;
        if (!first_failure.empty()) out << ", first failure: " << first_failure;
        return {held == total && total > 0, out.str()};
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body)
{
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs >= budget_seconds) {
        o.pass = false;
        o.detail += ", over the " + std::to_string(static_cast<int>(budget_seconds)) + " s budget";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %-50s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
}

RationalSampler sampler(int id)
{
    return RationalSampler(kSeed, static_cast<std::uint64_t>(id));
}

std::vector<double> to_doubles(const std::vector<Rational>& xs)
{
    std::vector<double> out;
    for (const auto& x : xs) out.push_back(x.to_double());
    return out;
}

} // namespace

int main()
{
    const auto box22 = enumerate_partitions(2, 2);

    criterion(1, "unfused Yang-Baxter relation", 5, [] {
        auto g = sampler(1);
        Collector c;
        for (int p = 0; p < 10; ++p) {
            Rational q = g.unit(), s = g.unit();
            auto u = g.distinct_units(2);
            c.add(check_ybe(q, s, u[0], u[1], 4));
        }
        return c.outcome();
    });

    criterion(2, "gauge relations, unfused and fused", 0, [] {
        auto g = sampler(2);
        Collector c;
        for (int p = 0; p < 10; ++p) {
            Rational q = g.unit(), s = g.unit(), u = g.unit(), x = g.unit();
            c.add(check_gauge(q, s, u, x, 4));
        }
        return c.outcome();
    });

    criterion(3, "fusion: brute force = recursion = formula", 60, [] {
        auto g = sampler(3);
        Collector c;
        for (int p = 0; p < 5; ++p) {
            Rational q = g.unit(), s = g.unit(), u = g.unit();
            c.add(check_fusion_routes(q, s, u, 3, 3));
        }
        return c.outcome();
    });

    criterion(4, "fused Yang-Baxter relation", 0, [] {
        auto g = sampler(4);
        Collector c;
        for (int p = 0; p < 5; ++p) {
            Rational q = g.unit(), s = g.unit();
            auto xy = g.distinct_units(2);
            c.add(check_fused_ybe(q, s, xy[0], xy[1], 2));
        }
        return c.outcome();
    });

    criterion(5, "spin qW: branching = lattice", 0, [] {
        auto g = sampler(5);
        Collector c;
        for (int p = 0; p < 5; ++p) {
            Rational q = g.unit(), s = g.unit();
            c.add(check_qw_routes(q, s, g.distinct_units(3)));
        }
        return c.outcome();
    });

    criterion(6, "spin qW: symmetry and stability", 0, [] {
        auto g = sampler(6);
        Collector c;
        for (int p = 0; p < 5; ++p) {
            Rational q = g.unit(), s = g.unit();
            c.add(check_qw_symmetry(q, s, g.distinct_units(3)));
        }
        return c.outcome();
    });

    criterion(7, "spin qW at s = 0 vs q-Whittaker", 0, [] {
        auto g = sampler(7);
        Collector c;
        for (int p = 0; p < 5; ++p) {
            Rational q = g.unit();
            c.add(check_s0_reduction(q, g.distinct_units(3)));
        }
        return c.outcome();
    });

    criterion(8, "stable spin HL: lattice = symmetrization", 0, [] {
        auto g = sampler(8);
        Collector c;
        for (int p = 0; p < 5; ++p) {
            Rational q = g.unit(), s = g.unit();
            c.add(check_stable_routes(q, s, g.distinct_units(3, {s})));
        }
        return c.outcome();
    });

    criterion(9, "dual Cauchy, skew and alternative forms", 0, [&] {
        auto g = sampler(9);
        Collector c;
        for (int p = 0; p < 10; ++p) {
            Rational q = g.unit(), s = g.unit();
            for (int m = 1; m <= 2; ++m)
                for (int n = 1; n <= 2; ++n) {
                    auto u = g.distinct_units(m), x = g.distinct_units(n);
                    for (const auto& mu : box22)
                        for (const auto& nu : box22)
                            for (auto form : {DualCauchyForm::Standard, DualCauchyForm::Alternative}) {
                                IdentityReport r = verify_dual_cauchy(q, s, u, x, mu, nu, form);
                                c.add(r);
                                c.expect(r.abs_dev == 0.0, "nonzero abs_dev");
                            }
                }
        }
        return c.outcome();
    });

    criterion(10, "vertical Pieri rule", 0, [] {
        auto g = sampler(10);
        Collector c;
        for (int n = 1; n <= 3; ++n) {
            Rational q = g.unit(), s = g.unit(), u = g.unit();
            auto x = g.distinct_units(n);
            for (const auto& mu : enumerate_partitions(3, 3)) c.add(verify_pieri_vertical(q, s, x, u, mu));
        }
        return c.outcome();
    });

    criterion(11, "q-Gauss summation, cutoff 30", 0, [] {
        Collector c;
        IdentityReport r = verify_q_gauss(0.3, 0.2, 0.1, 0.1, 30, kNumericTol);
        c.add(r);
        return c.outcome();
    });

    criterion(12, "qW Cauchy and skew Cauchy, cutoff 30", 0, [&] {
        Collector c;
        std::vector<double> x{0.1, 0.12}, y{0.1, -0.15};
        for (const auto& mu : box22)
            for (const auto& nu : box22) c.add(verify_qw_cauchy_skew(0.3, 0.2, x, y, mu, nu, 30, kNumericTol));
        // Cutoff doubling: at the standard point the cutoff-30 error is already at round-off,
        // so the drop is measured where truncation dominates, and 30 -> 60 must not get worse.
        std::vector<double> xb{0.5, -0.4}, yb{0.6, 0.5};
        double d4 = verify_qw_cauchy_skew(0.3, 0.2, xb, yb, Partition(), Partition(), 4, kNumericTol).abs_dev;
        double d8 = verify_qw_cauchy_skew(0.3, 0.2, xb, yb, Partition(), Partition(), 8, kNumericTol).abs_dev;
        c.expect(d4 >= 10 * d8, "cutoff doubling 4 -> 8 drop below 10x");
        double d30 = verify_qw_cauchy_skew(0.3, 0.2, x, y, Partition{1}, Partition{1}, 30, kNumericTol).abs_dev;
        double d60 = verify_qw_cauchy_skew(0.3, 0.2, x, y, Partition{1}, Partition{1}, 60, kNumericTol).abs_dev;
        c.expect(d60 <= d30 + 1e-14, "deviation grew from cutoff 30 to 60");
        Outcome o = c.outcome();
        std::ostringstream w;
        w << "; doubling 4->8 drop " << (d8 > 0 ? d4 / d8 : INFINITY) << "x, dev30 " << d30 << " dev60 " << d60;
        o.detail += w.str();
        return o;
    });

    criterion(13, "HL skew Cauchy and stable HL Cauchy, cutoff 40", 0, [&] {
        auto g = sampler(13);
        Collector c;
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n) {
                auto u = to_doubles(g.distinct_units(m)), v = to_doubles(g.distinct_units(n));
                for (auto& a : u) a *= 0.4;
                for (auto& b : v) b *= 0.4;
                for (int l = 0; l <= 2; ++l)
                    for (const auto& mu : partitions_with_size(l, 1))
                        for (const auto& nu : partitions_with_size(l + m, 1))
                            c.add(verify_hl_cauchy_skew(0.3, 0.2, u, v, mu, nu, 40, kNumericTol));
                for (const auto& mu : box22)
                    for (const auto& nu : box22) c.add(verify_stable_hl_cauchy(0.3, 0.2, u, v, mu, nu, 40, kNumericTol));
            }
        return c.outcome();
    });

    criterion(14, "horizontal Pieri rule, cutoff 30", 0, [&] {
        Collector c;
        for (const auto& nu : box22) c.add(verify_pieri_horizontal(0.3, 0.2, {0.1, 0.12}, 0.1, nu, 30, kNumericTol));
        return c.outcome();
    });

    criterion(15, "contour integral for spin qW", 120, [] {
        Collector c;
        for (const Partition& lambda : {Partition{1}, Partition{2}, Partition{2, 1}, Partition{3, 1}}) {
            std::vector<double> x(lambda.length(), 0.1);
            if (x.size() > 1) x[1] = 0.12;
            double value1 = 0.0;
            for (double radius : {1.0, 0.8, 1.2}) {
                IdentityReport r = qw_integral_check(0.3, 0.2, x, lambda, ContourSpec{radius, 64}, kIntegralTol);
                c.add(r);
                double value = r.lhs.value.real();
                if (radius == 1.0)
                    value1 = value;
                else
                    c.expect(std::fabs(value - value1) <= kRadiusTol, "radius dependence for " + lambda.str());
            }
        }
        return c.outcome();
    });

    criterion(16, "negative controls detect a perturbed weight", 0, [&] {
        Collector c;
        Rational q(1, 3), s(2, 5);
        auto bump = [](std::array<int, 4> v) { return Mutation<Rational>{v, Rational(6, 5)}; };
        c.expect(!check_ybe(q, s, Rational(1, 7), Rational(-3, 4), 4, bump({1, 1, 1, 1})).pass, "YBE mutation passed");
        c.expect(!check_fused_ybe(q, s, Rational(1, 7), Rational(-3, 4), 2, FusedYbeForm::Corrected, bump({1, 1, 1, 1})).pass,
                 "fused YBE mutation passed");
        std::vector<Rational> u{Rational(-1, 4), Rational(1, 6)}, x{Rational(3, 7), Rational(-2, 9)};
        c.expect(!verify_dual_cauchy(q, s, u, x, Partition{1}, Partition{2}, DualCauchyForm::Standard,
                                     std::optional<Mutation<Rational>>(bump({0, 1, 1, 0})))
                      .pass,
                 "dual Cauchy mutation passed");
        return c.outcome();
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
