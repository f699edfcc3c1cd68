#include "spinqw/identities.hpp"

#include <cmath>

namespace spinqw {

namespace {

void numeric_params(IdentityReport& r, double q, double s)
{
    r.param("q", to_string(q));
    r.param("s", to_string(s));
}

Partition partition_of(const State& st)
{
    return Partition::from_multiplicities(st);
}

// Forward distribution of single-path-injecting or path-preserving rows from `start`.
Distribution<double> forward(const std::vector<RowOperator<double>>& rows, const State& start, int max_col)
{
    State src = start;
    trim(src);
    Distribution<double> dist{{src, 1.0}};
    for (const auto& row : rows) dist = propagate(dist, row, max_col);
    return dist;
}

void require_hl_convergence(double s, const std::vector<double>& u, const std::vector<double>& v)
{
    for (double ui : u)
        for (double vj : v)
            require(std::fabs((ui - s) * (vj - s)) < std::fabs((1 - s * ui) * (1 - s * vj)),
                    "HL Cauchy: needs |(u_i - s)(v_j - s)| < |(1 - s u_i)(1 - s v_j)|");
}

void require_unit_disc(double value, const char* what)
{
    require(std::fabs(value) < 1.0, std::string(what) + " must lie in the unit disc");
}

double hl_kernel(double q, const std::vector<double>& u, const std::vector<double>& v)
{
    double k = 1.0;
    for (double ui : u)
        for (double vj : v) k *= (1 - q * ui * vj) / (1 - ui * vj);
    return k;
}

double qw_kernel(double q, double s, const std::vector<double>& x, const std::vector<double>& y)
{
    double k = 1.0;
    double s2 = q_pochhammer_inf(s * s, q);
    for (double xi : x)
        for (double yj : y)
            k *= q_pochhammer_inf(-s * xi, q) * q_pochhammer_inf(-s * yj, q) / (s2 * q_pochhammer_inf(xi * yj, q));
    return k;
}

// Sum over lambda of F_{lambda/mu}(u) G*_{lambda/nu}(v) with lambda_1 <= cutoff.
double hl_cauchy_lhs(double q, double s, const std::vector<double>& u, const std::vector<double>& v,
                     const Partition& mu, const Partition& nu, int cutoff)
{
    std::vector<RowOperator<double>> f_rows, g_rows;
    for (double ui : u) f_rows.push_back({unfused_family(q, s, ui), {{1, 1.0}}, 0, 0});
    for (double vj : v) g_rows.push_back({unfused_family(q, s, vj), {{0, 1.0}}, 0, 0});
    auto f = forward(f_rows, occupation_state(mu), cutoff);
    auto g = forward(g_rows, occupation_state(nu), cutoff);
    double c_nu = normalization_c(q, s, nu);
    double lhs = 0.0;
    for (const auto& [state, fv] : f) {
        auto it = g.find(state);
        if (it == g.end()) continue;
        lhs += fv * it->second * normalization_c(q, s, partition_of(state)) / c_nu;
    }
    return lhs;
}

} // namespace

IdentityReport verify_q_gauss(double q, double s, double x, double y, int cutoff, double tol)
{
    for (double v : {q, s, x, y}) require_unit_disc(v, "q-Gauss parameters");
    double lhs = 0.0;
    for (int i = 0; i <= cutoff; ++i)
        lhs += scaled_pochhammer(x, s, q, i) * scaled_pochhammer(y, s, q, i) /
               (q_pochhammer(s * s, q, i) * q_pochhammer(q, q, i));
    double rhs = qw_kernel(q, s, {x}, {y});
    IdentityReport r = compare("q-gauss", lhs, rhs, tol);
    numeric_params(r, q, s);
    r.param("x", to_string(x));
    r.param("y", to_string(y));
    r.cutoff = cutoff;
    return r;
}

IdentityReport verify_qw_cauchy_skew(double q, double s, const std::vector<double>& x, const std::vector<double>& y,
                                     const Partition& mu, const Partition& nu, int cutoff, double tol)
{
    require_unit_disc(q, "q");
    require_unit_disc(s, "s");
    for (double xi : x) require_unit_disc(xi, "x_i");
    for (double yj : y) require_unit_disc(yj, "y_j");
    for (double xi : x)
        for (double yj : y) require_unit_disc(xi * yj, "x_i y_j");
    Partition m = mu.positive(), n = nu.positive();
    auto f = qw_distribution(q, s, x, m, cutoff, false);
    auto g = qw_distribution(q, s, y, n, cutoff, true);
    double lhs = 0.0;
    for (const auto& [lam, fv] : f) {
        auto it = g.find(lam);
        if (it != g.end()) lhs += fv * it->second;
    }
    double sum = 0.0;
    for (const auto& kappa : enumerate_partitions(std::min(m.largest(), n.largest()), std::min(m.length(), n.length()))) {
        if (!contains(m, kappa) || !contains(n, kappa)) continue;
        sum += qw_F(q, s, x, n, kappa) * qw_F_star(q, s, y, m, kappa);
    }
    IdentityReport r = compare("qw-cauchy", lhs, qw_kernel(q, s, x, y) * sum, tol);
    numeric_params(r, q, s);
    r.param("x", scalar_list(x));
    r.param("y", scalar_list(y));
    r.param("mu", m.str());
    r.param("nu", n.str());
    r.cutoff = cutoff;
    return r;
}

IdentityReport verify_hl_cauchy_skew(double q, double s, const std::vector<double>& u, const std::vector<double>& v,
                                     const Partition& mu, const Partition& nu, int cutoff, double tol)
{
    require(nu.size() == mu.size() + u.size(), "HL skew Cauchy: nu must have size(mu) + len(u) parts");
    require_hl_convergence(s, u, v);
    double lhs = hl_cauchy_lhs(q, s, u, v, mu, nu, cutoff);
    double sum = 0.0;
    int n = static_cast<int>(mu.size());
    for (const auto& kappa : partitions_with_size(n, std::min(mu.largest(), nu.largest()))) {
        if (!contains(mu, kappa) || !contains(nu, kappa)) continue;
        sum += hl_F(q, s, u, nu, kappa) * hl_G_star(q, s, v, mu, kappa);
    }
    IdentityReport r = compare("hl-cauchy", lhs, hl_kernel(q, u, v) * sum, tol);
    numeric_params(r, q, s);
    r.param("u", scalar_list(u));
    r.param("v", scalar_list(v));
    r.param("mu", mu.str());
    r.param("nu", nu.str());
    r.cutoff = cutoff;
    return r;
}

IdentityReport verify_hl_cauchy(double q, double s, const std::vector<double>& u, const std::vector<double>& v,
                                int cutoff, double tol)
{
    require_hl_convergence(s, u, v);
    int l = static_cast<int>(u.size());
    Partition zeros(std::vector<int>(l, 0));
    double lhs = hl_cauchy_lhs(q, s, u, v, Partition(), zeros, cutoff);
    double rhs = q_pochhammer(q, q, l) * hl_kernel(q, u, v);
    for (double ui : u) rhs /= 1 - s * ui;
    IdentityReport r = compare("hl-cauchy-nonskew", lhs, rhs, tol);
    numeric_params(r, q, s);
    r.param("u", scalar_list(u));
    r.param("v", scalar_list(v));
    r.cutoff = cutoff;
    return r;
}

IdentityReport verify_stable_hl_cauchy(double q, double s, const std::vector<double>& u, const std::vector<double>& v,
                                       const Partition& mu, const Partition& nu, int cutoff, double tol)
{
    require_hl_convergence(s, u, v);
    Partition m = mu.positive(), n = nu.positive();
    std::vector<RowOperator<double>> f_rows, g_rows;
    for (double ui : u) f_rows.push_back(stable_row(q, s, ui));
    for (double vj : v) g_rows.push_back(stable_dual_row(q, s, vj));
    auto f = forward(f_rows, positive_occupation_state(m), cutoff);
    auto g = forward(g_rows, positive_occupation_state(n), cutoff);
    double lhs = 0.0;
    for (const auto& [state, fv] : f) {
        auto it = g.find(state);
        if (it != g.end()) lhs += fv * it->second;
    }
    double sum = 0.0;
    for (const auto& kappa : enumerate_partitions(std::min(m.largest(), n.largest()), std::min(m.length(), n.length()))) {
        if (!contains(m, kappa) || !contains(n, kappa)) continue;
        sum += stable_F(q, s, u, n, kappa) * stable_F_star(q, s, v, m, kappa);
    }
    IdentityReport r = compare("stable-hl-cauchy", lhs, hl_kernel(q, u, v) * sum, tol);
    numeric_params(r, q, s);
    r.param("u", scalar_list(u));
    r.param("v", scalar_list(v));
    r.param("mu", m.str());
    r.param("nu", n.str());
    r.cutoff = cutoff;
    return r;
}

IdentityReport verify_pieri_horizontal(double q, double s, const std::vector<double>& x, double y, const Partition& nu,
                                       int cutoff, double tol)
{
    require_unit_disc(q, "q");
    require_unit_disc(s, "s");
    require_unit_disc(y, "y");
    for (double xi : x) require_unit_disc(xi, "x_i");
    Partition n = nu.positive();
    int top = n.weight() + cutoff;
    auto f = qw_distribution(q, s, x, Partition(), top, false);
    auto g = qw_distribution(q, s, std::vector<double>{y}, n, top, true);
    auto value_of = [&](const Partition& p) {
        auto it = f.find(p);
        return it == f.end() ? 0.0 : it->second;
    };
    double lhs = 0.0;
    for (const auto& [lam, gv] : g) lhs += value_of(lam) * gv;
    double bracket = 1.0;
    for (int i = 1; i <= cutoff; ++i)
        bracket += scaled_pochhammer(y, s, q, i) / q_pochhammer(q, q, i) * value_of(Partition{i});
    IdentityReport r = compare("pieri-horizontal", lhs, bracket * value_of(n), tol);
    numeric_params(r, q, s);
    r.param("x", scalar_list(x));
    r.param("y", to_string(y));
    r.param("nu", n.str());
    r.cutoff = cutoff;
    return r;
}

} // namespace spinqw
