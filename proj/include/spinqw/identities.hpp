#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "spinqw/partition.hpp"
#include "spinqw/report.hpp"
#include "spinqw/spin_hl.hpp"
#include "spinqw/spin_qw.hpp"

namespace spinqw {

// A single vertex of the unfused weights rescaled by `factor` (negative control).
template <class T>
struct Mutation {
    std::array<int, 4> vertex;
    T factor;
};

namespace detail {

template <class T>
std::vector<RowOperator<T>> stable_rows(const T& q, const T& s, const std::vector<T>& u, bool dual,
                                        const std::optional<Mutation<T>>& mutation)
{
    std::vector<RowOperator<T>> rows;
    for (const auto& ui : u) {
        RowOperator<T> row = dual ? stable_dual_row(q, s, ui) : stable_row(q, s, ui);
        if (mutation) row.family = perturbed(row.family, mutation->vertex, mutation->factor);
        rows.push_back(row);
    }
    return rows;
}

template <class T>
T stable_lattice(const T& q, const T& s, const std::vector<T>& u, const Partition& lambda, const Partition& mu,
                 bool dual, const std::optional<Mutation<T>>& mutation)
{
    return lattice_value(stable_rows(q, s, u, dual, mutation), positive_occupation_state(mu),
                         positive_occupation_state(lambda), lambda.largest());
}

} // namespace detail

enum class DualCauchyForm {
    Standard,   // stable F against the dual qW polynomial
    Alternative // dual stable F against the qW polynomial
};

// Exact check of the skew dual Cauchy identity; the lambda- and kappa-sums are finite.
template <class T>
IdentityReport verify_dual_cauchy(const T& q, const T& s, const std::vector<T>& u, const std::vector<T>& x,
                                  const Partition& mu, const Partition& nu, DualCauchyForm form = DualCauchyForm::Standard,
                                  const std::optional<Mutation<T>>& mutation = std::nullopt, double tol = 1e-10)
{
    for (const auto& ui : u) require(!is_zero(T(1) - s * ui), "dual Cauchy: requires 1 - s u_i != 0");
    Partition m = mu.positive(), n = nu.positive();
    bool alt = form == DualCauchyForm::Alternative;
    auto stable = [&](const Partition& a, const Partition& b) {
        return detail::stable_lattice(q, s, u, a, b, alt, mutation);
    };
    auto whittaker = [&](const Partition& a, const Partition& b) {
        return alt ? qw_F(q, s, x, a, b) : qw_F_star(q, s, x, a, b);
    };
    int max_len = m.length() + static_cast<int>(u.size());
    int max_part = n.largest() + static_cast<int>(x.size());
    T lhs(0);
    for (const auto& lam : enumerate_partitions(max_part, max_len)) {
        if (!contains(lam, m) || !contains(lam, n)) continue;
        T f = stable(lam, m);
        if (is_zero(f)) continue;
        lhs += f * whittaker(lam.conjugate(), n.conjugate());
    }
    T kernel(1);
    for (const auto& ui : u)
        for (const auto& xj : x) kernel *= (T(1) + ui * xj) / (T(1) - s * ui);
    T sum(0);
    for (const auto& kappa : enumerate_partitions(std::min(m.largest(), n.largest()), std::min(m.length(), n.length()))) {
        if (!contains(m, kappa) || !contains(n, kappa)) continue;
        sum += stable(n, kappa) * whittaker(m.conjugate(), kappa.conjugate());
    }
    IdentityReport r = compare(alt ? "dual-cauchy-alt" : "dual-cauchy", lhs, kernel * sum, tol);
    r.param("q", to_string(q));
    r.param("s", to_string(s));
    r.param("u", scalar_list(u));
    r.param("x", scalar_list(x));
    r.param("mu", m.str());
    r.param("nu", n.str());
    return r;
}

// Second Pieri rule: lambda ranges over vertical strips added to mu with at most len(x) rows.
template <class T>
IdentityReport verify_pieri_vertical(const T& q, const T& s, const std::vector<T>& x, const T& u, const Partition& mu,
                                     double tol = 1e-10)
{
    require(!is_zero(T(1) - s * u), "vertical Pieri: requires 1 - s u != 0");
    Partition m = mu.positive();
    int n = static_cast<int>(x.size());
    T lhs(0);
    for (const auto& lam : enumerate_partitions(m.largest() + 1, n)) {
        if (!is_vertical_strip(lam, m)) continue;
        lhs += qw_F(q, s, x, lam) * stable_F_star(q, s, std::vector<T>{u}, lam.conjugate(), m.conjugate());
    }
    T ratio = (u - s) / (T(1) - s * u);
    T bracket(0), power(1);
    for (int i = 1; i <= n; ++i) {
        bracket += power * qw_F(q, s, x, Partition(std::vector<int>(i, 1)));
        power *= ratio;
    }
    bracket = T(1) + u * (T(1) - s * s) / (T(1) - s * u) * bracket;
    IdentityReport r = compare("pieri-vertical", lhs, bracket * qw_F(q, s, x, m), tol);
    r.param("q", to_string(q));
    r.param("s", to_string(s));
    r.param("x", scalar_list(x));
    r.param("u", to_string(u));
    r.param("mu", m.str());
    return r;
}

// psi_{lambda/mu}(q) = prod over j with m_j(mu) = m_j(lambda) + 1 of (1 - q^{m_j(mu)}).
template <class T>
T pieri_psi(const T& q, const Partition& lambda, const Partition& mu)
{
    T value(1);
    int top = std::max(lambda.largest(), mu.largest());
    for (int j = 1; j <= top; ++j) {
        int mm = mu.multiplicity(j), ml = lambda.multiplicity(j);
        if (mm == ml + 1) value *= T(1) - ipow(q, mm);
    }
    return value;
}

// The s = 0 vertical Pieri rule for ordinary q-Whittaker polynomials, for strips of size i.
template <class T>
IdentityReport verify_pieri_vertical_classical(const T& q, const std::vector<T>& x, const Partition& mu, int i,
                                               double tol = 1e-10)
{
    Partition m = mu.positive();
    int n = static_cast<int>(x.size());
    T lhs(0);
    for (const auto& lam : enumerate_partitions(m.largest() + 1, n)) {
        if (!is_vertical_strip(lam, m) || lam.weight() - m.weight() != i) continue;
        lhs += q_whittaker_classical(q, x, lam) * pieri_psi(q, lam.conjugate(), m.conjugate());
    }
    T rhs = q_whittaker_classical(q, x, Partition(std::vector<int>(i, 1))) * q_whittaker_classical(q, x, m);
    IdentityReport r = compare("pieri-vertical-s0", lhs, rhs, tol);
    r.param("q", to_string(q));
    r.param("x", scalar_list(x));
    r.param("mu", m.str());
    r.param("strip", std::to_string(i));
    return r;
}

// Numeric identities with infinite lambda-sums, evaluated in double precision.
IdentityReport verify_q_gauss(double q, double s, double x, double y, int cutoff, double tol = 1e-10);

IdentityReport verify_qw_cauchy_skew(double q, double s, const std::vector<double>& x, const std::vector<double>& y,
                                     const Partition& mu, const Partition& nu, int cutoff = 30, double tol = 1e-10);

IdentityReport verify_hl_cauchy_skew(double q, double s, const std::vector<double>& u, const std::vector<double>& v,
                                     const Partition& mu, const Partition& nu, int cutoff = 40, double tol = 1e-10);

IdentityReport verify_hl_cauchy(double q, double s, const std::vector<double>& u, const std::vector<double>& v,
                                int cutoff = 40, double tol = 1e-10);

IdentityReport verify_stable_hl_cauchy(double q, double s, const std::vector<double>& u, const std::vector<double>& v,
                                       const Partition& mu, const Partition& nu, int cutoff = 40, double tol = 1e-10);

IdentityReport verify_pieri_horizontal(double q, double s, const std::vector<double>& x, double y, const Partition& nu,
                                       int cutoff = 30, double tol = 1e-10);

// Cutoff-doubling witness: deviations at cutoff and 2*cutoff for the same identity.
struct ConvergenceWitness {
    double dev_at_cutoff;
    double dev_at_double;
    double drop() const { return dev_at_double > 0.0 ? dev_at_cutoff / dev_at_double : INFINITY; }
};

} // namespace spinqw
