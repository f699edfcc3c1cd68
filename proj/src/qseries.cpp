#include "spinqw/qseries.hpp"

#include <cstdio>

namespace spinqw {

std::string to_string(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_string(const Complex& z)
{
    return "(" + to_string(z.real()) + "," + to_string(z.imag()) + ")";
}

Complex q_pochhammer_inf(const Complex& a, const Complex& q, double tol)
{
    if (std::abs(q) >= 1.0) throw std::domain_error("q_pochhammer_inf requires |q| < 1");
    Complex result(1.0, 0.0), f = a;
    for (int i = 0; i < kInfiniteProductCap; ++i) {
        if (std::abs(f) < tol) break;
        result *= 1.0 - f;
        f *= q;
    }
    return result;
}

double q_pochhammer_inf(double a, double q, double tol)
{
    return q_pochhammer_inf(Complex(a, 0.0), Complex(q, 0.0), tol).real();
}

} // namespace spinqw
