#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinqw/scalar.hpp"

namespace spinqw {

enum class Mode { Exact, Numeric };

// A scalar as it appears in reports: exact rationals keep their "p/q" text.
struct ScalarValue {
    enum class Kind { Exact, Real, Complex } kind = Kind::Real;
    std::string exact;
    Complex value;

    static ScalarValue of(const Rational& r) { return {Kind::Exact, r.str(), to_complex(r)}; }
    static ScalarValue of(double x) { return {Kind::Real, {}, Complex(x, 0.0)}; }
    static ScalarValue of(const Complex& z) { return {Kind::Complex, {}, z}; }
};

struct IdentityReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    Mode mode = Mode::Exact;
    ScalarValue lhs, rhs;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    std::optional<int> cutoff;
    std::optional<std::uint64_t> seed;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;

    void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
};

IdentityReport compare_exact(const std::string& name, const Rational& lhs, const Rational& rhs);
IdentityReport compare_numeric(const std::string& name, const Complex& lhs, const Complex& rhs, double tol);

// Exact when the scalar type is Rational, numeric with tolerance otherwise.
inline IdentityReport compare(const std::string& name, const Rational& lhs, const Rational& rhs, double)
{
    return compare_exact(name, lhs, rhs);
}
inline IdentityReport compare(const std::string& name, double lhs, double rhs, double tol)
{
    auto r = compare_numeric(name, Complex(lhs, 0.0), Complex(rhs, 0.0), tol);
    r.lhs = ScalarValue::of(lhs);
    r.rhs = ScalarValue::of(rhs);
    return r;
}

std::string scalar_list(const std::vector<Rational>& xs);
std::string scalar_list(const std::vector<double>& xs);

std::string to_json_line(const IdentityReport& report);

} // namespace spinqw
