#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "spinqw/errors.hpp"
#include "spinqw/rational.hpp"

namespace spinqw {

using Complex = std::complex<double>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }

inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

inline Complex to_complex(const Rational& x) { return Complex(x.to_double(), 0.0); }
inline Complex to_complex(double x) { return Complex(x, 0.0); }
inline Complex to_complex(const Complex& z) { return z; }

inline double magnitude(const Rational& x) { return std::fabs(x.to_double()); }
inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Complex& z) { return std::abs(z); }

inline std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(double x);
std::string to_string(const Complex& z);

template <class T>
T checked_div(const T& num, const T& den, const char* what = "division by zero")
{
    if (is_zero(den)) throw DivisionByZero(what);
    return num / den;
}

// Integer power; negative exponents divide and therefore require x != 0.
template <class T>
T ipow(const T& x, long n)
{
    if (n < 0) return checked_div(T(1), ipow(x, -n), "negative power of zero");
    T result(1), base = x;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

inline int sign_power(long n) { return (n % 2 == 0) ? 1 : -1; }

} // namespace spinqw
