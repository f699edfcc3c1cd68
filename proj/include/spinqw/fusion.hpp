#pragma once

#include <array>
#include <vector>

#include "spinqw/qseries.hpp"
#include "spinqw/vertex.hpp"

namespace spinqw {

// Normalisation of the fused left edge: q^{j(j-1)/2} times the q-binomial [J choose j].
template <class T>
T fusion_normalization(const T& q, int j, int J)
{
    return ipow(q, static_cast<long>(j) * (j - 1) / 2) * q_pochhammer(q, q, J) /
           (q_pochhammer(q, q, j) * q_pochhammer(q, q, J - j));
}

namespace detail {

inline void binary_strings(int length, int ones, std::vector<std::vector<int>>& out)
{
    std::vector<int> cur(length, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == length) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (length - pos > left) {
            cur[pos] = 0;
            self(self, pos + 1, left);
        }
        if (left > 0) {
            cur[pos] = 1;
            self(self, pos + 1, left - 1);
            cur[pos] = 0;
        }
    };
    rec(rec, 0, ones);
}

} // namespace detail

// J stacked unfused rows at spectral u, qu, ..., q^{J-1}u, summed over edge strings
// with |left| = j and |right| = l.
template <class T>
T fused_weight_bruteforce(const T& q, const T& s, const T& u, int J, int i, int j, int k, int l)
{
    require(J >= 1, "fused weight: J must be at least 1");
    require(0 <= j && j <= J && 0 <= l && l <= J && i >= 0 && k >= 0, "fused weight: indices out of range");
    std::vector<T> spectral;
    T x = u;
    for (int m = 0; m < J; ++m, x *= q) spectral.push_back(x);
    std::vector<std::vector<int>> lefts, rights;
    detail::binary_strings(J, j, lefts);
    detail::binary_strings(J, l, rights);
    T total(0);
    for (const auto& a : lefts) {
        long shift = 0;
        for (int m = 0; m < J; ++m) shift += m * a[m];
        T qa = ipow(q, shift);
        for (const auto& b : rights) total += qa * n_vertex(q, s, spectral, i, a, k, b);
    }
    return total / fusion_normalization(q, j, J);
}

// Peels off the lowest unfused row: spin J at u from spin J-1 at qu.
template <class T>
T fused_weight_recursive(const T& q, const T& s, const T& u, int J, int i, int j, int k, int l)
{
    if (i < 0 || k < 0 || j < 0 || l < 0 || j > J || l > J) return T(0);
    if (J == 1) return weight_unfused(q, s, u, i, j, k, l);
    T qJ = ipow(q, J);
    T den = T(1) - qJ;
    T first = (ipow(q, j) - qJ) / den;
    T second = (T(1) - ipow(q, j)) / den;
    T total(0);
    for (int n = 0; n < 2; ++n) {
        if (i - n >= 0)
            total += first * weight_unfused(q, s, u, i, 0, i - n, n) *
                     fused_weight_recursive(q, s, q * u, J - 1, i - n, j, k, l - n);
        total += second * weight_unfused(q, s, u, i, 1, i - n + 1, n) *
                 fused_weight_recursive(q, s, q * u, J - 1, i - n + 1, j - 1, k, l - n);
    }
    return total;
}

// Closed form with a terminating balanced 4phi3 series.
template <class T>
T fused_weight_formula(const T& q, const T& s, const T& u, int J, int i, int j, int k, int l)
{
    require(J >= 1, "fused weight: J must be at least 1");
    require(0 <= j && j <= J && 0 <= l && l <= J && i >= 0 && k >= 0, "fused weight: indices out of range");
    if (i + j != k + l) return T(0);
    T qJ = ipow(q, J);
    T pre = T(sign_power(l - i)) * ipow(q, static_cast<long>(i) * (i + 2 * j - 1) / 2) * ipow(s, j - k) * ipow(u, i) *
            q_pochhammer(checked_div(u, s, "fused weight: s = 0"), q, l - i) * q_pochhammer(s * s, q, i);
    T den = q_pochhammer(s * u, q, k + l) * q_pochhammer(ipow(q, J - j + 1), q, j - l) * q_pochhammer(q, q, i) *
            q_pochhammer(s * s, q, k);
    if (is_zero(den)) throw DivisionByZero("fused weight formula: vanishing denominator");
    std::vector<T> a{ipow(q, -i), qJ * s * u, checked_div(q * s, u, "fused weight: u = 0")};
    std::vector<T> b{s * s, ipow(q, l - i + 1), ipow(q, J - k - l + 1)};
    return pre / den * q_hypergeometric_reg(k, a, b, q, q);
}

// The fused weight at u = s, written as a rational function of q^J.
template <class T>
T weight_at_u_equals_s(const T& q, const T& s, int J, int i, int j, int k, int l)
{
    if (i < 0 || j < 0 || k < 0 || l < 0 || i + j != k + l || i < l) return T(0);
    T qJ = ipow(q, J);
    return ipow(T(-1) * s * qJ, l) * q_pochhammer(ipow(q, -J), q, l) * q_pochhammer(s * s * qJ, q, i - l) *
           q_pochhammer(q, q, k) / (q_pochhammer(q, q, l) * q_pochhammer(q, q, i - l) * q_pochhammer(s * s, q, k));
}

// Continuation q^J -> -x/s of the u = s weight.
template <class T>
T weight_W(const T& q, const T& s, const T& x, int i, int j, int k, int l)
{
    if (i < 0 || j < 0 || k < 0 || l < 0 || i + j != k + l || i < l) return T(0);
    return scaled_pochhammer(x, s, q, l) * q_pochhammer(T(-1) * s * x, q, i - l) * q_pochhammer(q, q, k) /
           (q_pochhammer(q, q, l) * q_pochhammer(q, q, i - l) * q_pochhammer(s * s, q, k));
}

template <class T>
T weight_W_dual(const T& q, const T& s, const T& x, int i, int j, int k, int l)
{
    if (i < 0 || j < 0 || k < 0 || l < 0 || j + k != i + l || k < l) return T(0);
    return scaled_pochhammer(x, s, q, l) * q_pochhammer(T(-1) * s * x, q, k - l) * q_pochhammer(q, q, k) /
           (q_pochhammer(q, q, l) * q_pochhammer(q, q, k - l) * q_pochhammer(s * s, q, k));
}

template <class T>
WeightFamily<T> fused_family(const T& q, const T& s, const T& x)
{
    return {[=](int i, int j, int k, int l) { return weight_W(q, s, x, i, j, k, l); },
            Conservation::SouthWestNorthEast, kUnbounded};
}

template <class T>
WeightFamily<T> fused_dual_family(const T& q, const T& s, const T& x)
{
    return {[=](int i, int j, int k, int l) { return weight_W_dual(q, s, x, i, j, k, l); },
            Conservation::NorthWestSouthEast, kUnbounded};
}

// Continued fused R-matrix with spin labels q^J -> -x/s, q^I -> -y/s.
template <class T>
T r_matrix_fused(const T& q, const T& s, const T& x, const T& y, int i, int j, int k, int l)
{
    if (i < 0 || j < 0 || k < 0 || l < 0 || i + j != k + l || i < l) return T(0);
    T den = q_pochhammer(T(-1) * s / y, q, i);
    if (is_zero(den)) throw DivisionByZero("r_matrix_fused: (-s/y;q)_i vanishes");
    return scaled_pochhammer(x, s, q, l) / ipow(y, l) * q_pochhammer(x / y, q, i - l) * q_pochhammer(q, q, i) /
           (q_pochhammer(q, q, l) * q_pochhammer(q, q, i - l) * den);
}

// Integer-spin fused R-matrix; indices i,k range over 0..I and j,l over 0..J.
template <class T>
T r_matrix_fused_integer(const T& q, int J, int I, int i, int j, int k, int l)
{
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > I || k > I || j > J || l > J) return T(0);
    if (i + j != k + l || i < l) return T(0);
    T qJI = ipow(q, J - I);
    return ipow(qJI, l) * q_pochhammer(ipow(q, -J), q, l) * q_pochhammer(qJI, q, i - l) * q_pochhammer(q, q, i) /
           (q_pochhammer(q, q, l) * q_pochhammer(q, q, i - l) * q_pochhammer(ipow(q, -I), q, i));
}

enum class FusedYbeForm {
    Corrected, // R_{y,x}: the form that holds identically
    AsPrinted  // R_{x,y} with the same W placement; fails at generic points
};

template <class T>
struct FusedYbeSides {
    T lhs;
    T rhs;
    bool holds() const { return lhs == rhs; }
};

// Both sides of the continued fused Yang-Baxter relation for one pair of index triples.
// `wx` and `wy` are vertex callables (i,j,k,l) for spectral x and y.
template <class T, class WX, class WY>
FusedYbeSides<T> fused_ybe_sides_with(const WX& wx, const WY& wy, const T& q, const T& s, const T& x, const T& y,
                                      std::array<int, 3> is, std::array<int, 3> js, FusedYbeForm form, int cap = -1)
{
    auto [i1, i2, i3] = is;
    auto [j1, j2, j3] = js;
    if (cap < 0) cap = i1 + i2 + i3 + 1;
    auto R = [&](int a, int b, int c, int d) {
        return form == FusedYbeForm::Corrected ? r_matrix_fused(q, s, y, x, a, b, c, d)
                                               : r_matrix_fused(q, s, x, y, a, b, c, d);
    };
    T lhs(0), rhs(0);
    for (int k1 = 0; k1 <= i1 + i2; ++k1) {
        int k2 = i1 + i2 - k1;
        T r = R(i2, i1, k2, k1);
        if (is_zero(r)) continue;
        for (int k3 = 0; k3 <= cap; ++k3) lhs += r * wy(i3, k1, k3, j1) * wx(k3, k2, j3, j2);
    }
    for (int k1 = 0; k1 <= j1 + j2; ++k1) {
        int k2 = j1 + j2 - k1;
        T r = R(k2, k1, j2, j1);
        if (is_zero(r)) continue;
        for (int k3 = 0; k3 <= cap; ++k3) rhs += wx(i3, i2, k3, k2) * wy(k3, i1, j3, k1) * r;
    }
    return {lhs, rhs};
}

template <class T>
FusedYbeSides<T> fused_ybe_sides(const T& q, const T& s, const T& x, const T& y, std::array<int, 3> is,
                                 std::array<int, 3> js, FusedYbeForm form = FusedYbeForm::Corrected, int cap = -1)
{
    auto wx = [&](int a, int b, int c, int d) { return weight_W(q, s, x, a, b, c, d); };
    auto wy = [&](int a, int b, int c, int d) { return weight_W(q, s, y, a, b, c, d); };
    return fused_ybe_sides_with(wx, wy, q, s, x, y, is, js, form, cap);
}

template <class T>
bool fused_ybe_check(const T& q, const T& s, const T& x, const T& y, std::array<int, 3> is, std::array<int, 3> js,
                     int cap = -1)
{
    return fused_ybe_sides(q, s, x, y, is, js, FusedYbeForm::Corrected, cap).holds();
}

// Two fused columns of spin J versus the J-row unfused lattice with summed edge strings.
// Returns {fused, unfused}.
template <class T>
std::pair<T, T> concatenation_sides(const T& q, const T& s, const T& u, int J, std::array<int, 2> bottom,
                                    std::array<int, 2> top, int j, int l)
{
    T fused(0);
    int mid = bottom[0] + j - top[0];
    if (mid >= 0 && mid <= J)
        fused = fused_weight_bruteforce(q, s, u, J, bottom[0], j, top[0], mid) *
                fused_weight_bruteforce(q, s, u, J, bottom[1], mid, top[1], l);
    std::vector<T> spectral;
    T x = u;
    for (int m = 0; m < J; ++m, x *= q) spectral.push_back(x);
    std::vector<std::vector<int>> lefts, rights, mids;
    detail::binary_strings(J, j, lefts);
    detail::binary_strings(J, l, rights);
    T unfused(0);
    if (mid >= 0 && mid <= J) {
        detail::binary_strings(J, mid, mids);
        for (const auto& a : lefts) {
            long shift = 0;
            for (int m = 0; m < J; ++m) shift += m * a[m];
            T qa = ipow(q, shift);
            for (const auto& c : mids) {
                T first = n_vertex(q, s, spectral, bottom[0], a, top[0], c);
                if (is_zero(first)) continue;
                for (const auto& b : rights) unfused += qa * first * n_vertex(q, s, spectral, bottom[1], c, top[1], b);
            }
        }
        unfused /= fusion_normalization(q, j, J);
    }
    return {fused, unfused};
}

} // namespace spinqw
