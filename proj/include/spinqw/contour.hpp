#pragma once

#include <functional>
#include <vector>

#include "spinqw/partition.hpp"
#include "spinqw/report.hpp"
#include "spinqw/scalar.hpp"

namespace spinqw {

// Circle |u| = radius centred at the origin, discretised by `nodes` equally spaced points.
struct ContourSpec {
    double radius = 1.0;
    int nodes = 64;
};

inline constexpr int kMaxIntegralDimension = 4;

// (1/N^L) sum over the discretised torus of f(u_1..u_L); approximates prod du_i/(2 pi i u_i).
Complex torus_average(int dimension, const ContourSpec& spec, const std::function<Complex(const std::vector<Complex>&)>& f);

// Multiple-integral representation of the spin q-Whittaker polynomial F_lambda(x_1..x_m).
Complex qw_integral(double q, double s, const std::vector<double>& x, const Partition& lambda, const ContourSpec& spec);

// n-fold contour integral for the spin HL function G_lambda, lambda with n parts.
Complex hl_G_integral_full(double q, double s, const std::vector<double>& v, const Partition& lambda,
                           const ContourSpec& spec);

// Same function after taking the residues of the trailing zero parts explicitly.
Complex hl_G_integral_reduced(double q, double s, const std::vector<double>& v, const Partition& lambda,
                              const ContourSpec& spec);

IdentityReport qw_integral_check(double q, double s, const std::vector<double>& x, const Partition& lambda,
                                 const ContourSpec& spec, double tol = 1e-8);

enum class GIntegralForm { Full, Reduced };

IdentityReport hl_G_integral_check(double q, double s, const std::vector<double>& v, const Partition& lambda,
                                   const ContourSpec& spec, GIntegralForm form = GIntegralForm::Full, double tol = 1e-8);

} // namespace spinqw
