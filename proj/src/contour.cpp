#include "spinqw/contour.hpp"

#include <cmath>
#include <numbers>

#include "spinqw/spin_hl.hpp"
#include "spinqw/spin_qw.hpp"

namespace spinqw {

namespace {

void require_contour(double q, double s, const ContourSpec& spec)
{
    require(spec.nodes >= 16, "contour: at least 16 nodes per circle");
    require(std::fabs(q) < 1.0, "contour: requires |q| < 1");
    require(std::fabs(s) < 1.0, "contour: requires |s| < 1");
    require(std::fabs(s) < spec.radius, "contour: s must lie inside the circle (|s| < r)");
    require(s == 0.0 || spec.radius < 1.0 / std::fabs(s), "contour: 1/s must lie outside the circle (r < 1/|s|)");
}

Complex vandermonde_ratio(const std::vector<Complex>& u, double q)
{
    Complex value(1.0, 0.0);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) value *= (u[i] - u[j]) / (u[i] - q * u[j]);
    return value;
}

} // namespace

Complex torus_average(int dimension, const ContourSpec& spec, const std::function<Complex(const std::vector<Complex>&)>& f)
{
    require(dimension >= 0, "torus_average: negative dimension");
    std::vector<Complex> nodes(spec.nodes);
    for (int k = 0; k < spec.nodes; ++k)
        nodes[k] = std::polar(spec.radius, 2.0 * std::numbers::pi * k / spec.nodes);
    std::vector<Complex> u(dimension);
    std::vector<int> idx(dimension, 0);
    Complex total(0.0, 0.0);
    for (;;) {
        for (int d = 0; d < dimension; ++d) u[d] = nodes[idx[d]];
        total += f(u);
        int d = dimension - 1;
        while (d >= 0 && ++idx[d] == spec.nodes) idx[d--] = 0;
        if (d < 0) break;
    }
    return total / std::pow(static_cast<double>(spec.nodes), dimension);
}

Complex qw_integral(double q, double s, const std::vector<double>& x, const Partition& lambda, const ContourSpec& spec)
{
    require_contour(q, s, spec);
    Partition lam = lambda.positive();
    int m = static_cast<int>(x.size());
    require(lam.length() <= m, "qw_integral: needs l(lambda) <= number of variables");
    int L = lam.largest();
    require(L <= kMaxIntegralDimension, "qw_integral: largest part above 4 is not supported");
    Partition conj = lam.conjugate();
    return torus_average(L, spec, [&](const std::vector<Complex>& u) {
        Complex value = vandermonde_ratio(u, q);
        for (int i = 0; i < L; ++i) {
            Complex one_su = 1.0 - s * u[i];
            value *= std::pow(one_su / (u[i] - s), conj[i]);
            Complex num(1.0, 0.0);
            for (double xj : x) num *= 1.0 + u[i] * xj;
            value *= num / std::pow(one_su, m + 1);
        }
        return value;
    });
}

namespace {

void require_outside(const std::vector<double>& v, const ContourSpec& spec)
{
    for (double vj : v)
        require(std::fabs(vj) * spec.radius < 1.0, "G integral: 1/v_j must lie outside the circle (|v_j| < 1/r)");
}

Complex hl_kernel_factor(const Complex& u, double q, const std::vector<double>& v)
{
    Complex value(1.0, 0.0);
    for (double vj : v) value *= (1.0 - q * u * vj) / (1.0 - u * vj);
    return value;
}

} // namespace

Complex hl_G_integral_full(double q, double s, const std::vector<double>& v, const Partition& lambda,
                           const ContourSpec& spec)
{
    require_contour(q, s, spec);
    require_outside(v, spec);
    int n = static_cast<int>(lambda.size());
    require(n <= kMaxIntegralDimension, "G integral: more than 4 integration variables is not supported");
    double pre = q_pochhammer(s * s, q, n);
    return pre * torus_average(n, spec, [&](const std::vector<Complex>& u) {
        Complex value = vandermonde_ratio(u, q);
        for (int i = 0; i < n; ++i) {
            Complex one_su = 1.0 - s * u[i];
            // du/(2 pi i) = u * du/(2 pi i u)
            value *= u[i] / (one_su * (u[i] - s)) * std::pow(one_su / (u[i] - s), lambda[i]) *
                     hl_kernel_factor(u[i], q, v);
        }
        return value;
    });
}

Complex hl_G_integral_reduced(double q, double s, const std::vector<double>& v, const Partition& lambda,
                              const ContourSpec& spec)
{
    require_contour(q, s, spec);
    require_outside(v, spec);
    int n = static_cast<int>(lambda.size());
    int k = n - lambda.length();
    int d = n - k;
    require(d <= kMaxIntegralDimension, "G integral: more than 4 integration variables is not supported");
    double sqk = s * std::pow(q, k);
    double pre = q_pochhammer(s * s, q, n) / q_pochhammer(s * s, q, k);
    for (double vj : v) pre *= (1.0 - sqk * vj) / (1.0 - s * vj);
    return pre * torus_average(d, spec, [&](const std::vector<Complex>& u) {
        Complex value = vandermonde_ratio(u, q);
        for (int i = 0; i < d; ++i) {
            Complex one_su = 1.0 - s * u[i];
            value *= u[i] / (one_su * (u[i] - sqk)) * std::pow(one_su / (u[i] - s), lambda[i]) *
                     hl_kernel_factor(u[i], q, v);
        }
        return value;
    });
}

IdentityReport qw_integral_check(double q, double s, const std::vector<double>& x, const Partition& lambda,
                                 const ContourSpec& spec, double tol)
{
    Complex numeric = qw_integral(q, s, x, lambda, spec);
    double exact = qw_F(q, s, x, lambda);
    IdentityReport r = compare_numeric("qw-integral", numeric, Complex(exact, 0.0), tol);
    r.rhs = ScalarValue::of(exact);
    r.param("q", to_string(q));
    r.param("s", to_string(s));
    r.param("x", scalar_list(x));
    r.param("lambda", lambda.positive().str());
    r.param("radius", to_string(spec.radius));
    r.param("nodes", std::to_string(spec.nodes));
    return r;
}

IdentityReport hl_G_integral_check(double q, double s, const std::vector<double>& v, const Partition& lambda,
                                   const ContourSpec& spec, GIntegralForm form, double tol)
{
    Complex numeric = form == GIntegralForm::Full ? hl_G_integral_full(q, s, v, lambda, spec)
                                                  : hl_G_integral_reduced(q, s, v, lambda, spec);
    double exact = hl_G(q, s, v, lambda);
    IdentityReport r = compare_numeric(form == GIntegralForm::Full ? "hl-g-integral" : "hl-g-integral-reduced", numeric,
                                       Complex(exact, 0.0), tol);
    r.rhs = ScalarValue::of(exact);
    r.param("q", to_string(q));
    r.param("s", to_string(s));
    r.param("v", scalar_list(v));
    r.param("lambda", lambda.str());
    r.param("radius", to_string(spec.radius));
    r.param("nodes", std::to_string(spec.nodes));
    return r;
}

} // namespace spinqw
