#pragma once

#include <map>
#include <vector>

#include "spinqw/fusion.hpp"
#include "spinqw/partition.hpp"
#include "spinqw/qseries.hpp"
#include "spinqw/vertex.hpp"

namespace spinqw {

enum class Route { Branching, Lattice };

// prod_i (s^2;q)_{lambda_i - lambda_{i+1}} / (q;q)_{lambda_i - lambda_{i+1}}, the stable
// normalisation evaluated on the conjugate partition.
template <class T>
T conjugate_normalization(const T& q, const T& s, const Partition& lambda)
{
    T value(1);
    for (int i = 0; i < lambda.length(); ++i) {
        int d = lambda[i] - lambda[i + 1];
        value *= q_pochhammer(s * s, q, d) / q_pochhammer(q, q, d);
    }
    return value;
}

namespace detail {

// Shared one-variable product; `dual` moves the (q;q)/(s^2;q) ratio onto nu.
template <class T>
T qw_onevar_impl(const T& q, const T& s, const T& x, const Partition& mu, const Partition& nu, bool dual)
{
    if (!interlaces(mu, nu)) return T(0);
    int len = std::max(mu.length(), nu.length());
    T value(1), msx = T(-1) * s * x;
    for (int i = 0; i < len; ++i) {
        int up = mu[i] - nu[i], down = nu[i] - mu[i + 1];
        int gap = dual ? nu[i] - nu[i + 1] : mu[i] - mu[i + 1];
        value *= scaled_pochhammer(x, s, q, up) * q_pochhammer(msx, q, down) * q_pochhammer(q, q, gap);
        T den = q_pochhammer(q, q, up) * q_pochhammer(q, q, down) * q_pochhammer(s * s, q, gap);
        value = checked_div(value, den, "one-variable qW: vanishing (s^2;q) factor");
    }
    return value;
}

// Partitions nu with base < nu (interlacing) and nu inside bound.
inline std::vector<Partition> interlacing_extensions(const Partition& base, const Partition& bound)
{
    Partition b = base.positive();
    int len = b.length() + 1;
    std::vector<Partition> out;
    std::vector<int> cur(len, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == len) {
            std::vector<int> parts = cur;
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            out.emplace_back(parts);
            return;
        }
        int lo = b[i];
        int hi = std::min(bound[i], i == 0 ? bound[0] : b[i - 1]);
        for (int v = lo; v <= hi; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    if (contains(bound, b)) rec(rec, 0);
    return out;
}

template <class T, class OneVar>
T branching_sum(const std::vector<T>& xs, const Partition& lambda, const Partition& mu, const OneVar& onevar)
{
    Partition lam = lambda.positive(), start = mu.positive();
    if (!contains(lam, start)) return T(0);
    std::map<Partition, T> dist{{start, T(1)}};
    for (const auto& x : xs) {
        std::map<Partition, T> next;
        for (const auto& [nu, value] : dist)
            for (const auto& ext : interlacing_extensions(nu, lam)) {
                T w = onevar(x, ext, nu);
                if (is_zero(w)) continue;
                auto it = next.find(ext);
                if (it == next.end())
                    next.emplace(ext, value * w);
                else
                    it->second += value * w;
            }
        dist = std::move(next);
    }
    auto it = dist.find(lam);
    return it == dist.end() ? T(0) : it->second;
}

} // namespace detail

template <class T>
T qw_onevar(const T& q, const T& s, const T& x, const Partition& mu, const Partition& nu)
{
    return detail::qw_onevar_impl(q, s, x, mu, nu, false);
}

template <class T>
T qw_onevar_dual(const T& q, const T& s, const T& x, const Partition& mu, const Partition& nu)
{
    return detail::qw_onevar_impl(q, s, x, mu, nu, true);
}

// Occupations m_c(lambda') = lambda_c - lambda_{c+1} at columns c >= 1.
inline State conjugate_state(const Partition& lambda)
{
    State st(lambda.length() + 1, 0);
    for (int c = 1; c <= lambda.length(); ++c) st[c] = lambda[c - 1] - lambda[c];
    trim(st);
    return st;
}

// Fused row whose saturated zeroth column emits j paths with weight x^j (-s/x;q)_j/(q;q)_j.
template <class T>
RowOperator<T> qw_row(const T& q, const T& s, const T& x, int max_inflow, bool dual)
{
    RowOperator<T> row{dual ? fused_dual_family(q, s, x) : fused_family(q, s, x), {}, 0, 1};
    for (int j = 0; j <= max_inflow; ++j)
        row.left_terms.emplace_back(j, scaled_pochhammer(x, s, q, j) / q_pochhammer(q, q, j));
    return row;
}

template <class T>
T qw_F(const T& q, const T& s, const std::vector<T>& xs, const Partition& lambda, const Partition& mu = Partition(),
       Route route = Route::Branching)
{
    Partition lam = lambda.positive(), base = mu.positive();
    if (!contains(lam, base)) return T(0);
    if (route == Route::Branching)
        return detail::branching_sum(xs, lam, base, [&](const T& x, const Partition& a, const Partition& b) {
            return qw_onevar(q, s, x, a, b);
        });
    std::vector<RowOperator<T>> rows;
    for (const auto& x : xs) rows.push_back(qw_row(q, s, x, lam.largest() - base.largest(), false));
    return lattice_value(rows, conjugate_state(base), conjugate_state(lam), lam.length());
}

template <class T>
T qw_F_star(const T& q, const T& s, const std::vector<T>& ys, const Partition& lambda,
            const Partition& mu = Partition(), Route route = Route::Branching)
{
    Partition lam = lambda.positive(), base = mu.positive();
    if (!contains(lam, base)) return T(0);
    if (route == Route::Branching)
        return detail::branching_sum(ys, lam, base, [&](const T& y, const Partition& a, const Partition& b) {
            return qw_onevar_dual(q, s, y, a, b);
        });
    std::vector<RowOperator<T>> rows;
    for (const auto& y : ys) rows.push_back(qw_row(q, s, y, lam.largest() - base.largest(), true));
    return lattice_value(rows, conjugate_state(base), conjugate_state(lam), lam.length());
}

// Normalisation route for the dual polynomial.
template <class T>
T qw_F_star_normalized(const T& q, const T& s, const std::vector<T>& ys, const Partition& lambda,
                       const Partition& mu = Partition())
{
    return conjugate_normalization(q, s, lambda) / conjugate_normalization(q, s, mu) *
           qw_F(q, s, ys, lambda, mu, Route::Branching);
}

// All values F_{lambda/mu}(xs) (or the dual family) with |lambda| <= max_weight, by branching.
template <class T>
std::map<Partition, T> qw_distribution(const T& q, const T& s, const std::vector<T>& xs, const Partition& mu,
                                       int max_weight, bool dual = false)
{
    std::map<Partition, T> dist{{mu.positive(), T(1)}};
    for (const auto& x : xs) {
        std::map<Partition, T> next;
        for (const auto& [nu, value] : dist) {
            int room = max_weight - nu.weight();
            std::vector<int> hull(nu.length() + 1);
            hull[0] = nu.largest() + std::max(room, 0);
            for (int i = 1; i <= nu.length(); ++i) hull[i] = nu[i - 1];
            for (const auto& ext : detail::interlacing_extensions(nu, Partition(hull))) {
                if (ext.weight() > max_weight) continue;
                T w = dual ? qw_onevar_dual(q, s, x, ext, nu) : qw_onevar(q, s, x, ext, nu);
                if (is_zero(w)) continue;
                auto it = next.find(ext);
                if (it == next.end())
                    next.emplace(ext, value * w);
                else
                    it->second += value * w;
            }
        }
        dist = std::move(next);
    }
    return dist;
}

// Ordinary q-Whittaker skew polynomial, coded independently by recursion over
// Gelfand-Tsetlin chains with the t = 0 Macdonald branching coefficients.
template <class T>
T q_whittaker_classical(const T& q, const std::vector<T>& xs, const Partition& lambda, const Partition& mu = Partition())
{
    Partition lam = lambda.positive();
    auto coeff = [&](const Partition& big, const Partition& small) {
        T c(1);
        for (int i = 0; i < big.length(); ++i)
            c *= q_pochhammer(q, q, big[i] - big[i + 1]) /
                 (q_pochhammer(q, q, big[i] - small[i]) * q_pochhammer(q, q, small[i] - big[i + 1]));
        return c;
    };
    auto rec = [&](auto&& self, const Partition& top, int n) -> T {
        if (n == 0) return top == mu.positive() ? T(1) : T(0);
        T total(0);
        const T& x = xs[n - 1];
        // Remove a horizontal strip from top; the remainder must still contain mu.
        Partition m = mu.positive();
        int len = top.length();
        std::vector<int> cur(len, 0);
        auto strip = [&](auto&& sself, int i) -> void {
            if (i == len) {
                std::vector<int> parts = cur;
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                Partition small(parts);
                if (!contains(small, m)) return;
                total += coeff(top, small) * ipow(x, top.weight() - small.weight()) * self(self, small, n - 1);
                return;
            }
            for (int v = top[i + 1]; v <= top[i]; ++v) {
                cur[i] = v;
                sself(sself, i + 1);
            }
        };
        strip(strip, 0);
        return total;
    };
    return rec(rec, lam, static_cast<int>(xs.size()));
}

} // namespace spinqw
