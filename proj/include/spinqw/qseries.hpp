#pragma once

#include <vector>

#include "spinqw/errors.hpp"
#include "spinqw/scalar.hpp"

namespace spinqw {

// (a;q)_m for any integer m; negative m inverts (a q^{-1};q^{-1})_{|m|}.
template <class T>
T q_pochhammer(const T& a, const T& q, long m)
{
    T result(1);
    if (m >= 0) {
        T f = a;
        for (long i = 0; i < m; ++i) {
            result *= T(1) - f;
            f *= q;
        }
        return result;
    }
    T qinv = checked_div(T(1), q, "q_pochhammer: q = 0 with negative index");
    T f = a * qinv;
    for (long i = 1; i <= -m; ++i) {
        T factor = T(1) - f;
        if (is_zero(factor)) throw DivisionByZero("q_pochhammer: vanishing factor at negative index");
        result /= factor;
        f *= qinv;
    }
    return result;
}

inline constexpr int kInfiniteProductCap = 10000;

// (a;q)_inf, stopping once |a q^i| < tol or after kInfiniteProductCap factors.
Complex q_pochhammer_inf(const Complex& a, const Complex& q, double tol = 1e-16);
double q_pochhammer_inf(double a, double q, double tol = 1e-16);

// x^l (-s/x;q)_l written as prod_{j<l} (x + s q^j), regular at x = 0.
template <class T>
T scaled_pochhammer(const T& x, const T& s, const T& q, long l)
{
    T result(1), sq = s;
    for (long j = 0; j < l; ++j) {
        result *= x + sq;
        sq *= q;
    }
    return result;
}

// Regularised series sum_{k=0}^n z^k (q^{-n};q)_k/(q;q)_k prod_i (a_i;q)_k (b_i q^k;q)_{n-k}.
template <class T>
T q_hypergeometric_reg(long n, const std::vector<T>& a, const std::vector<T>& b, const T& q, const T& z)
{
    require(n >= 0, "q_hypergeometric_reg: n must be non-negative");
    require(!a.empty() && a.size() == b.size(), "q_hypergeometric_reg: parameter lists must have equal positive length");
    T qn = ipow(q, -n);
    T total(0), zk(1), qk(1);
    for (long k = 0; k <= n; ++k) {
        T term = zk * q_pochhammer(qn, q, k) / q_pochhammer(q, q, k);
        for (std::size_t i = 0; i < a.size(); ++i)
            term *= q_pochhammer(a[i], q, k) * q_pochhammer(b[i] * qk, q, n - k);
        total += term;
        zk *= z;
        qk *= q;
    }
    return total;
}

} // namespace spinqw
