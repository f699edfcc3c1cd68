#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "spinqw/partition.hpp"
#include "spinqw/qseries.hpp"
#include "spinqw/vertex.hpp"

namespace spinqw {

// Column occupations of a partition including the zero-part column.
inline State occupation_state(const Partition& p)
{
    State st = p.multiplicities().counts;
    trim(st);
    return st;
}

// Occupations of columns >= 1 only; column 0 is left empty.
inline State positive_occupation_state(const Partition& p)
{
    State st = p.positive().multiplicities().counts;
    if (!st.empty()) st[0] = 0;
    trim(st);
    return st;
}

template <class T>
T normalization_c(const T& q, const T& s, const Partition& lambda)
{
    int n = static_cast<int>(lambda.size());
    T value = q_pochhammer(q, q, n) / q_pochhammer(s * s, q, n);
    for (int m : lambda.multiplicities().counts) value *= q_pochhammer(s * s, q, m) / q_pochhammer(q, q, m);
    return value;
}

template <class T>
T normalization_c_tilde(const T& q, const T& s, const Partition& lambda)
{
    T value(1);
    auto counts = lambda.multiplicities().counts;
    for (std::size_t c = 1; c < counts.size(); ++c)
        value *= q_pochhammer(s * s, q, counts[c]) / q_pochhammer(q, q, counts[c]);
    return value;
}

// <mu| C(u_1) ... C(u_n) |lambda>: each row injects one path at the left and none exits right.
template <class T>
T hl_F(const T& q, const T& s, const std::vector<T>& u, const Partition& lambda, const Partition& mu = Partition())
{
    require(lambda.size() == mu.size() + u.size(), "hl_F: lambda must have size(mu) + len(u) parts (zero parts counted)");
    std::vector<RowOperator<T>> rows;
    for (const auto& ui : u) rows.push_back({unfused_family(q, s, ui), {{1, T(1)}}, 0, 0});
    return lattice_value(rows, occupation_state(mu), occupation_state(lambda), lambda.largest());
}

// <mu| A(v_1) ... A(v_n) |lambda>: no path enters or exits horizontally.
template <class T>
T hl_G(const T& q, const T& s, const std::vector<T>& v, const Partition& lambda, const Partition& mu)
{
    require(lambda.size() == mu.size(), "hl_G: lambda and mu must have the same number of parts");
    std::vector<RowOperator<T>> rows;
    for (const auto& vi : v) rows.push_back({unfused_family(q, s, vi), {{0, T(1)}}, 0, 0});
    return lattice_value(rows, occupation_state(mu), occupation_state(lambda), lambda.largest());
}

template <class T>
T hl_G(const T& q, const T& s, const std::vector<T>& v, const Partition& lambda)
{
    return hl_G(q, s, v, lambda, Partition(std::vector<int>(lambda.size(), 0)));
}

template <class T>
T hl_G_star(const T& q, const T& s, const std::vector<T>& v, const Partition& lambda, const Partition& mu)
{
    return normalization_c(q, s, lambda) / normalization_c(q, s, mu) * hl_G(q, s, v, lambda, mu);
}

// Same function from the dual-weight lattice: paths run down-right from mu (top) to lambda (bottom).
template <class T>
T hl_G_star_lattice(const T& q, const T& s, const std::vector<T>& v, const Partition& lambda, const Partition& mu)
{
    require(lambda.size() == mu.size(), "hl_G_star: lambda and mu must have the same number of parts");
    std::vector<RowOperator<T>> rows;
    for (const auto& vi : v) rows.push_back({dual_family(q, s, vi), {{0, T(1)}}, 0, 0});
    return lattice_value(rows, occupation_state(mu), occupation_state(lambda), lambda.largest());
}

// Stable row: column 0 is saturated and contributes u^j for the edge j it emits.
template <class T>
RowOperator<T> stable_row(const T& q, const T& s, const T& u)
{
    return {unfused_family(q, s, u), {{0, T(1)}, {1, u}}, 0, 1};
}

template <class T>
RowOperator<T> stable_dual_row(const T& q, const T& s, const T& v)
{
    return {dual_family(q, s, v), {{0, T(1)}, {1, v}}, 0, 1};
}

template <class T>
T stable_F(const T& q, const T& s, const std::vector<T>& u, const Partition& lambda, const Partition& mu = Partition())
{
    std::vector<RowOperator<T>> rows;
    for (const auto& ui : u) rows.push_back(stable_row(q, s, ui));
    return lattice_value(rows, positive_occupation_state(mu), positive_occupation_state(lambda), lambda.largest());
}

template <class T>
T stable_F_star(const T& q, const T& s, const std::vector<T>& v, const Partition& lambda,
                const Partition& mu = Partition())
{
    return normalization_c_tilde(q, s, lambda) / normalization_c_tilde(q, s, mu) * stable_F(q, s, v, lambda, mu);
}

template <class T>
T stable_F_star_lattice(const T& q, const T& s, const std::vector<T>& v, const Partition& lambda,
                        const Partition& mu = Partition())
{
    std::vector<RowOperator<T>> rows;
    for (const auto& vi : v) rows.push_back(stable_dual_row(q, s, vi));
    return lattice_value(rows, positive_occupation_state(mu), positive_occupation_state(lambda), lambda.largest());
}

// Sum over the symmetric group; requires distinct u_i and u_i != s.
template <class T>
T stable_F_symmetrization(const T& q, const T& s, const std::vector<T>& u, const Partition& lambda)
{
    int n = static_cast<int>(u.size());
    Partition lam = lambda.positive();
    int len = lam.length();
    require(len <= n, "stable_F_symmetrization: length of lambda exceeds number of variables");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (u[a] == u[b]) throw DivisionByZero("stable_F_symmetrization: coincident spectral parameters");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total(0);
    do {
        T term(1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                const T& ua = u[perm[a]];
                const T& ub = u[perm[b]];
                term *= (ua - q * ub) / (ua - ub);
            }
        for (int a = 0; a < len; ++a) {
            const T& ua = u[perm[a]];
            term *= checked_div(ua, ua - s, "stable_F_symmetrization: u_i = s");
        }
        for (int a = 0; a < n; ++a) {
            const T& ua = u[perm[a]];
            term *= ipow(checked_div(ua - s, T(1) - s * ua, "stable_F_symmetrization: 1 - s u_i = 0"), lam[a]);
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ipow(T(1) - q, n) / q_pochhammer(q, q, n - len) * total;
}

} // namespace spinqw
