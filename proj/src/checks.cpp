#include "spinqw/checks.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "spinqw/contour.hpp"
#include "spinqw/errors.hpp"
#include "spinqw/inputs.hpp"
#include "spinqw/random.hpp"
#include "spinqw/spin_hl.hpp"
#include "spinqw/spin_qw.hpp"
#include "spinqw/vertex.hpp"

namespace spinqw {

namespace {

class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)) {}

    void add(const Rational& lhs, const Rational& rhs, const std::string& label)
    {
        ++total_;
        if (lhs == rhs) {
            ++held_;
            if (!failed_) lhs_ = lhs, rhs_ = rhs;
            return;
        }
        if (!failed_) {
            failed_ = true;
            lhs_ = lhs;
            rhs_ = rhs;
            label_ = label;
        }
    }

    IdentityReport report() const
    {
        IdentityReport r = compare_exact(name_, lhs_, rhs_);
        r.note = std::to_string(held_) + "/" + std::to_string(total_) + " cases hold";
        if (failed_) r.note += "; first failure at " + label_;
        return r;
    }

private:
    std::string name_;
    Rational lhs_, rhs_;
    std::string label_;
    int total_ = 0, held_ = 0;
    bool failed_ = false;
};

std::string label(const std::string& what, std::initializer_list<int> idx)
{
    std::string out = what + "(";
    bool first = true;
    for (int v : idx) out += (first ? "" : ",") + std::to_string(v), first = false;
    return out + ")";
}

std::string pair_label(const Partition& lambda, const Partition& mu, std::size_t m)
{
    return "lambda=" + lambda.str() + " mu=" + mu.str() + " m=" + std::to_string(m);
}

bool matches(const std::optional<Mutation<Rational>>& mutation, int i, int j, int k, int l)
{
    return mutation && mutation->vertex == std::array<int, 4>{i, j, k, l};
}

std::vector<std::pair<Partition, Partition>> nested_pairs(Box box)
{
    auto parts = enumerate_partitions(box.cols, box.rows);
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& lambda : parts)
        for (const auto& mu : parts)
            if (contains(lambda, mu)) out.emplace_back(lambda, mu);
    return out;
}

} // namespace

IdentityReport check_ybe(const Rational& q, const Rational& s, const Rational& u1, const Rational& u2, int max_index,
                         const std::optional<Mutation<Rational>>& mutation)
{
    auto w = [&](const Rational& u, int i, int j, int k, int l) {
        Rational value = weight_unfused(q, s, u, i, j, k, l);
        return matches(mutation, i, j, k, l) ? value * mutation->factor : value;
    };
    auto pr = r_matrix(q, checked_div(u2, u1, "ybe: u1 = 0"));
    std::swap(pr[1], pr[2]);
    Tally tally("ybe");
    for (int i = 0; i <= max_index; ++i)
        for (int k = 0; k <= max_index; ++k) {
            auto lhs = mat_mul(pr, two_row_matrix(w, u1, u2, i, k));
            auto rhs = mat_mul(two_row_matrix(w, u2, u1, i, k), pr);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) tally.add(lhs[a][b], rhs[a][b], label("i,k,row,col=", {i, k, a, b}));
        }
    IdentityReport r = tally.report();
    r.param("q", q.str());
    r.param("s", s.str());
    r.param("u", scalar_list(std::vector<Rational>{u1, u2}));
    return r;
}

IdentityReport check_gauge(const Rational& q, const Rational& s, const Rational& u, const Rational& x, int max_index)
{
    Tally tally("gauge");
    Rational s2 = s * s;
    auto conj = [&](int i, int k) {
        return q_pochhammer(q, q, k) / q_pochhammer(s2, q, k) * q_pochhammer(s2, q, i) / q_pochhammer(q, q, i);
    };
    for (int i = 0; i <= max_index; ++i)
        for (int k = 0; k <= max_index; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l)
                    tally.add(weight_unfused(q, s, u, i, j, k, l), conj(i, k) * weight_dual(q, s, u, k, j, i, l),
                              label("unfused i,j,k,l=", {i, j, k, l}));
    for (int i = 0; i <= max_index; ++i)
        for (int j = 0; j <= max_index; ++j)
            for (int k = 0; k <= max_index; ++k)
                for (int l = 0; l <= max_index; ++l)
                    tally.add(weight_W(q, s, x, i, j, k, l), conj(i, k) * weight_W_dual(q, s, x, k, j, i, l),
                              label("fused i,j,k,l=", {i, j, k, l}));
    IdentityReport r = tally.report();
    r.param("q", q.str());
    r.param("s", s.str());
    r.param("u", u.str());
    r.param("x", x.str());
    return r;
}

IdentityReport check_fusion_routes(const Rational& q, const Rational& s, const Rational& u, int max_spin, int max_index)
{
    Tally tally("fusion-routes");
    for (int J = 1; J <= max_spin; ++J)
        for (int i = 0; i <= max_index; ++i)
            for (int k = 0; k <= max_index; ++k)
                for (int j = 0; j <= J; ++j)
                    for (int l = 0; l <= J; ++l) {
                        if (i + j != k + l) continue;
                        Rational brute = fused_weight_bruteforce(q, s, u, J, i, j, k, l);
                        tally.add(brute, fused_weight_recursive(q, s, u, J, i, j, k, l),
                                  label("recursion J,i,j,k,l=", {J, i, j, k, l}));
                        tally.add(brute, fused_weight_formula(q, s, u, J, i, j, k, l),
                                  label("formula J,i,j,k,l=", {J, i, j, k, l}));
                        tally.add(fused_weight_bruteforce(q, s, s, J, i, j, k, l),
                                  weight_at_u_equals_s(q, s, J, i, j, k, l), label("u=s J,i,j,k,l=", {J, i, j, k, l}));
                    }
    IdentityReport r = tally.report();
    r.param("q", q.str());
    r.param("s", s.str());
    r.param("u", u.str());
    return r;
}

IdentityReport check_fused_ybe(const Rational& q, const Rational& s, const Rational& x, const Rational& y, int max_entry,
                               FusedYbeForm form, const std::optional<Mutation<Rational>>& mutation)
{
    auto weight = [&](const Rational& z) {
        return [&, z](int i, int j, int k, int l) {
            Rational value = weight_W(q, s, z, i, j, k, l);
            return matches(mutation, i, j, k, l) ? value * mutation->factor : value;
        };
    };
    auto wx = weight(x), wy = weight(y);
    Tally tally(form == FusedYbeForm::Corrected ? "fused-ybe" : "fused-ybe-as-printed");
    int e = max_entry + 1;
    for (int code = 0; code < e * e * e * e * e * e; ++code) {
        int c = code;
        std::array<int, 6> d{};
        for (auto& v : d) v = c % e, c /= e;
        auto sides = fused_ybe_sides_with(wx, wy, q, s, x, y, {d[0], d[1], d[2]}, {d[3], d[4], d[5]}, form);
        tally.add(sides.lhs, sides.rhs, label("i1,i2,i3,j1,j2,j3=", {d[0], d[1], d[2], d[3], d[4], d[5]}));
    }
    IdentityReport r = tally.report();
    r.param("q", q.str());
    r.param("s", s.str());
    r.param("x", x.str());
    r.param("y", y.str());
    return r;
}

IdentityReport check_qw_routes(const Rational& q, const Rational& s, const std::vector<Rational>& xs, Box box)
{
    Tally tally("route-agreement");
    for (const auto& [lambda, mu] : nested_pairs(box))
        for (std::size_t m = 1; m <= xs.size(); ++m) {
            std::vector<Rational> pre(xs.begin(), xs.begin() + m);
            std::string at = pair_label(lambda, mu, m);
            tally.add(qw_F(q, s, pre, lambda, mu, Route::Branching), qw_F(q, s, pre, lambda, mu, Route::Lattice),
                      "F " + at);
            Rational star = qw_F_star(q, s, pre, lambda, mu, Route::Branching);
            tally.add(star, qw_F_star(q, s, pre, lambda, mu, Route::Lattice), "F* lattice " + at);
            tally.add(star, qw_F_star_normalized(q, s, pre, lambda, mu), "F* normalisation " + at);
        }
    IdentityReport r = tally.report();
    r.param("q", q.str());
    r.param("s", s.str());
    r.param("x", scalar_list(xs));
    r.param("box", std::to_string(box.cols) + "x" + std::to_string(box.rows));
    return r;
}

IdentityReport check_qw_symmetry(const Rational& q, const Rational& s, const std::vector<Rational>& xs, Box box)
{
    Tally tally("qw-symmetry");
    std::vector<Rational> extended = xs;
    extended.push_back(-s);
    for (const auto& [lambda, mu] : nested_pairs(box)) {
        Rational base = qw_F(q, s, xs, lambda, mu);
        std::string at = pair_label(lambda, mu, xs.size());
        std::vector<int> perm(xs.size());
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<Rational> permuted;
            for (int p : perm) permuted.push_back(xs[p]);
            tally.add(base, qw_F(q, s, permuted, lambda, mu), "permutation " + at);
        }
        tally.add(base, qw_F(q, s, extended, lambda, mu), "stability " + at);
    }
    IdentityReport r = tally.report();
    r.param("q", q.str());
    r.param("s", s.str());
    r.param("x", scalar_list(xs));
    r.param("box", std::to_string(box.cols) + "x" + std::to_string(box.rows));
    return r;
}

IdentityReport check_s0_reduction(const Rational& q, const std::vector<Rational>& xs, Box box)
{
    Tally tally("s0-reduction");
    Rational zero(0);
    for (const auto& [lambda, mu] : nested_pairs(box))
        for (std::size_t m = 1; m <= xs.size(); ++m) {
            std::vector<Rational> pre(xs.begin(), xs.begin() + m);
            tally.add(qw_F(q, zero, pre, lambda, mu), q_whittaker_classical(q, pre, lambda, mu),
                      pair_label(lambda, mu, m));
        }
    IdentityReport r = tally.report();
    r.param("q", q.str());
    r.param("x", scalar_list(xs));
    r.param("box", std::to_string(box.cols) + "x" + std::to_string(box.rows));
    return r;
}

IdentityReport check_stable_routes(const Rational& q, const Rational& s, const std::vector<Rational>& us, Box box)
{
    Tally tally("stable-routes");
    auto parts = enumerate_partitions(box.cols, box.rows);
    for (const auto& lambda : parts)
        if (lambda.length() <= static_cast<int>(us.size()))
            tally.add(stable_F(q, s, us, lambda), stable_F_symmetrization(q, s, us, lambda),
                      "symmetrization lambda=" + lambda.str());
    for (const auto& [lambda, mu] : nested_pairs(box)) {
        std::string at = pair_label(lambda, mu, us.size());
        tally.add(stable_F_star(q, s, us, lambda, mu), stable_F_star_lattice(q, s, us, lambda, mu), "stable dual " + at);
        Partition lp = lambda.padded(box.rows), mp = mu.padded(box.rows);
        tally.add(hl_G_star(q, s, us, lp, mp), hl_G_star_lattice(q, s, us, lp, mp), "G* " + at);
    }
    IdentityReport r = tally.report();
    r.param("q", q.str());
    r.param("s", s.str());
    r.param("u", scalar_list(us));
    r.param("box", std::to_string(box.cols) + "x" + std::to_string(box.rows));
    return r;
}

namespace {

// Values for one trial: taken from the request when present, otherwise drawn from the sampler.
class TrialContext {
public:
    TrialContext(const VerifyRequest& request, int trial, int attempt)
        : request_(request),
          sampler_(request.seed, static_cast<std::uint64_t>(trial) + (static_cast<std::uint64_t>(attempt) << 32))
    {
    }

    bool sampled() const { return sampled_; }

    bool given(const std::string& key) const { return request_.values.count(key) > 0; }

    template <class T>
    T scalar(const std::string& key, const Rational& scale = Rational(1))
    {
        if (given(key)) {
            auto items = parse_scalar_list<T>(request_.values.at(key));
            if (items.size() != 1) throw UsageError("--" + key + " expects a single value");
            return items[0];
        }
        sampled_ = true;
        return convert<T>(sampler_.unit() * scale);
    }

    // List of `fallback` values, or the count from --m/--n when `count_option` is set.
    template <class T>
    std::vector<T> list(const std::string& key, int count_option, int fallback, const Rational& scale = Rational(1),
                        const std::vector<Rational>& avoid = {})
    {
        if (given(key)) return parse_scalar_list<T>(request_.values.at(key));
        sampled_ = true;
        int count = count_option >= 0 ? count_option : fallback;
        std::vector<Rational> scaled_avoid;
        for (const auto& a : avoid) scaled_avoid.push_back(a / scale);
        std::vector<T> out;
        for (const auto& r : sampler_.distinct_units(count, scaled_avoid)) out.push_back(convert<T>(r * scale));
        return out;
    }

    Partition partition(const std::string& key, const std::vector<Partition>& pool)
    {
        if (given(key)) return parse_partition_arg(request_.values.at(key));
        sampled_ = true;
        return pool[sampler_.integer(0, static_cast<int>(pool.size()) - 1)];
    }

private:
    template <class T>
    static T convert(const Rational& r)
    {
        if constexpr (std::is_same_v<T, Rational>)
            return r;
        else
            return r.to_double();
    }

    const VerifyRequest& request_;
    RationalSampler sampler_;
    bool sampled_ = false;
};

constexpr int kMaxRedraws = 50;

// Sampled numeric points stay well inside every convergence region.
const Rational kNumericScale(2, 5);

std::vector<Partition> box_pool(int cols, int rows, int size = -1)
{
    auto parts = enumerate_partitions(cols, rows);
    if (size >= 0)
        for (auto& p : parts) p = p.padded(size);
    return parts;
}

template <class T>
IdentityReport dual_cauchy_trial(const VerifyRequest& req, TrialContext& ctx, DualCauchyForm form)
{
    T q = ctx.scalar<T>("q"), s = ctx.scalar<T>("s");
    auto u = ctx.list<T>("u", req.m, 2);
    auto x = ctx.list<T>("x", req.n, 2);
    auto pool = box_pool(2, 2);
    Partition mu = ctx.partition("mu", pool), nu = ctx.partition("nu", pool);
    return verify_dual_cauchy(q, s, u, x, mu, nu, form, std::optional<Mutation<T>>(), req.tol);
}

template <class T>
IdentityReport pieri_vertical_trial(const VerifyRequest& req, TrialContext& ctx)
{
    T q = ctx.scalar<T>("q"), s = ctx.scalar<T>("s");
    auto x = ctx.list<T>("x", req.n, 3);
    T u = ctx.scalar<T>("u");
    Partition mu = ctx.partition("mu", box_pool(3, 3));
    return verify_pieri_vertical(q, s, x, u, mu, req.tol);
}

using TrialFn = std::function<IdentityReport(const VerifyRequest&, TrialContext&, Mode)>;

struct Entry {
    CheckInfo info;
    TrialFn run;
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table = {
        {{"ybe", "unfused Yang-Baxter relation, all outer edges up to 4", true, false},
         [](const VerifyRequest&, TrialContext& ctx, Mode) {
             Rational q = ctx.scalar<Rational>("q"), s = ctx.scalar<Rational>("s");
             auto u = ctx.list<Rational>("u", -1, 2);
             if (u.size() != 2) throw UsageError("ybe needs exactly two spectral parameters in --u");
             return check_ybe(q, s, u[0], u[1]);
         }},
        {{"gauge", "gauge relation to the dual weights, unfused and continued fused", true, false},
         [](const VerifyRequest&, TrialContext& ctx, Mode) {
             Rational q = ctx.scalar<Rational>("q"), s = ctx.scalar<Rational>("s");
             Rational u = ctx.scalar<Rational>("u"), x = ctx.scalar<Rational>("x");
             return check_gauge(q, s, u, x);
         }},
        {{"fusion-routes", "fused weights by brute force, recursion and closed formula", true, false},
         [](const VerifyRequest&, TrialContext& ctx, Mode) {
             Rational q = ctx.scalar<Rational>("q"), s = ctx.scalar<Rational>("s"), u = ctx.scalar<Rational>("u");
             return check_fusion_routes(q, s, u);
         }},
        {{"fused-ybe", "Yang-Baxter relation for the continued fused weights, entries up to 2", true, false},
         [](const VerifyRequest&, TrialContext& ctx, Mode) {
             Rational q = ctx.scalar<Rational>("q"), s = ctx.scalar<Rational>("s");
             Rational x = ctx.scalar<Rational>("x"), y = ctx.scalar<Rational>("y");
             return check_fused_ybe(q, s, x, y);
         }},
        {{"route-agreement", "spin qW polynomials: branching = lattice, dual routes, 3x3 box", true, false},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             Rational q = ctx.scalar<Rational>("q"), s = ctx.scalar<Rational>("s");
             return check_qw_routes(q, s, ctx.list<Rational>("x", req.m, 3));
         }},
        {{"qw-symmetry", "spin qW polynomials: permutation symmetry and stability at x = -s", true, false},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             Rational q = ctx.scalar<Rational>("q"), s = ctx.scalar<Rational>("s");
             return check_qw_symmetry(q, s, ctx.list<Rational>("x", req.m, 3));
         }},
        {{"s0-reduction", "spin qW at s = 0 against the classical q-Whittaker polynomials", true, false},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             Rational q = ctx.scalar<Rational>("q");
             return check_s0_reduction(q, ctx.list<Rational>("x", req.m, 3));
         }},
        {{"stable-routes", "stable spin HL: lattice = symmetrization, dual and G* routes", true, false},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             Rational q = ctx.scalar<Rational>("q"), s = ctx.scalar<Rational>("s");
             return check_stable_routes(q, s, ctx.list<Rational>("u", req.n, 3, Rational(1), {s}));
         }},
        {{"dual-cauchy", "skew dual Cauchy identity (finite sums)", true, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode mode) {
             return mode == Mode::Exact ? dual_cauchy_trial<Rational>(req, ctx, DualCauchyForm::Standard)
                                        : dual_cauchy_trial<double>(req, ctx, DualCauchyForm::Standard);
         }},
        {{"dual-cauchy-alt", "skew dual Cauchy identity, normalised alternative form", true, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode mode) {
             return mode == Mode::Exact ? dual_cauchy_trial<Rational>(req, ctx, DualCauchyForm::Alternative)
                                        : dual_cauchy_trial<double>(req, ctx, DualCauchyForm::Alternative);
         }},
        {{"pieri-vertical", "vertical-strip Pieri rule (finite sums)", true, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode mode) {
             return mode == Mode::Exact ? pieri_vertical_trial<Rational>(req, ctx)
                                        : pieri_vertical_trial<double>(req, ctx);
         }},
        {{"q-gauss", "q-Gauss summation", false, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             double q = ctx.scalar<double>("q", kNumericScale), s = ctx.scalar<double>("s", kNumericScale);
             double x = ctx.scalar<double>("x", kNumericScale), y = ctx.scalar<double>("y", kNumericScale);
             return verify_q_gauss(q, s, x, y, req.cutoff, req.tol);
         }},
        {{"qw-cauchy", "skew Cauchy identity for the spin qW polynomials", false, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             double q = ctx.scalar<double>("q", kNumericScale), s = ctx.scalar<double>("s", kNumericScale);
             auto x = ctx.list<double>("x", req.m, 2, kNumericScale);
             auto y = ctx.list<double>("y", req.n, 2, kNumericScale);
             auto pool = box_pool(2, 2);
             Partition mu = ctx.partition("mu", pool), nu = ctx.partition("nu", pool);
             return verify_qw_cauchy_skew(q, s, x, y, mu, nu, req.cutoff, req.tol);
         }},
        {{"hl-cauchy", "skew Cauchy identity for the spin HL functions F and G*", false, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             double q = ctx.scalar<double>("q", kNumericScale), s = ctx.scalar<double>("s", kNumericScale);
             auto u = ctx.list<double>("u", req.m, 2, kNumericScale);
             auto v = ctx.list<double>("v", req.n, 2, kNumericScale);
             Partition mu = ctx.partition("mu", box_pool(2, 2, 2));
             Partition nu = ctx.partition("nu", box_pool(2, 2, static_cast<int>(mu.size() + u.size())));
             return verify_hl_cauchy_skew(q, s, u, v, mu, nu, req.cutoff, req.tol);
         }},
        {{"hl-cauchy-nonskew", "Cauchy identity for F and G* with empty boundary partitions", false, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             double q = ctx.scalar<double>("q", kNumericScale), s = ctx.scalar<double>("s", kNumericScale);
             auto u = ctx.list<double>("u", req.m, 2, kNumericScale);
             auto v = ctx.list<double>("v", req.n, 2, kNumericScale);
             return verify_hl_cauchy(q, s, u, v, req.cutoff, req.tol);
         }},
        {{"stable-hl-cauchy", "skew Cauchy identity for the stable spin HL functions", false, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             double q = ctx.scalar<double>("q", kNumericScale), s = ctx.scalar<double>("s", kNumericScale);
             auto u = ctx.list<double>("u", req.m, 2, kNumericScale);
             auto v = ctx.list<double>("v", req.n, 2, kNumericScale);
             auto pool = box_pool(2, 2);
             Partition mu = ctx.partition("mu", pool), nu = ctx.partition("nu", pool);
             return verify_stable_hl_cauchy(q, s, u, v, mu, nu, req.cutoff, req.tol);
         }},
        {{"pieri-horizontal", "horizontal-strip Pieri rule", false, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             double q = ctx.scalar<double>("q", kNumericScale), s = ctx.scalar<double>("s", kNumericScale);
             auto x = ctx.list<double>("x", req.n, 2, kNumericScale);
             double y = ctx.scalar<double>("y", kNumericScale);
             Partition nu = ctx.partition("nu", box_pool(2, 2));
             return verify_pieri_horizontal(q, s, x, y, nu, req.cutoff, req.tol);
         }},
        {{"qw-integral", "contour-integral formula for the spin qW polynomials", false, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             double q = ctx.scalar<double>("q", kNumericScale), s = ctx.scalar<double>("s", kNumericScale);
             Partition lambda = ctx.partition("lambda", {Partition{1}, Partition{2}, Partition{2, 1}, Partition{3, 1}});
             int fallback = std::max(lambda.length(), 2);
             auto x = ctx.list<double>("x", req.m, fallback, kNumericScale);
             return qw_integral_check(q, s, x, lambda, ContourSpec{}, req.tol);
         }},
        {{"hl-g-integral", "contour-integral formula for the spin HL functions G", false, true},
         [](const VerifyRequest& req, TrialContext& ctx, Mode) {
             double q = ctx.scalar<double>("q", kNumericScale), s = ctx.scalar<double>("s", kNumericScale);
             Partition lambda = ctx.partition("lambda", box_pool(2, 3, 3));
             auto v = ctx.list<double>("v", req.n, 2, kNumericScale);
             return hl_G_integral_check(q, s, v, lambda, ContourSpec{}, GIntegralForm::Full, req.tol);
         }},
    };
    return table;
}

const Entry& find_entry(const std::string& name)
{
    for (const auto& e : entries())
        if (e.info.name == name) return e;
    throw UsageError("unknown identity '" + name + "' (see list-identities)");
}

} // namespace

const std::vector<CheckInfo>& check_registry()
{
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const CheckInfo& find_check(const std::string& name)
{
    return find_entry(name).info;
}

Mode resolve_mode(const VerifyRequest& request)
{
    const CheckInfo& info = find_check(request.name);
    Mode mode = implied_mode(request.values, request.mode, info.exact ? Mode::Exact : Mode::Numeric);
    if (mode == Mode::Exact && !info.exact)
        throw UsageError(info.name + " involves infinite products and runs in numeric mode only");
    if (mode == Mode::Numeric && !info.numeric) throw UsageError(info.name + " is an exact-only check");
    return mode;
}

IdentityReport run_check(const VerifyRequest& request, int trial)
{
    const Entry& entry = find_entry(request.name);
    Mode mode = resolve_mode(request);
    // A sampled point that hits a vanishing denominator is redrawn from a fresh stream.
    for (int attempt = 0;; ++attempt) {
        TrialContext ctx(request, trial, attempt);
        try {
            IdentityReport r = entry.run(request, ctx, mode);
            r.seed = request.seed;
            r.param("trial", std::to_string(trial));
            if (attempt > 0) r.param("redraws", std::to_string(attempt));
            return r;
        } catch (const DivisionByZero&) {
            if (!ctx.sampled() || attempt + 1 >= kMaxRedraws) throw;
        }
    }
}

} // namespace spinqw
