#include "spinqw/report.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

namespace spinqw {

namespace {

nlohmann::ordered_json scalar_json(const ScalarValue& v)
{
    switch (v.kind) {
    case ScalarValue::Kind::Exact: return v.exact;
    case ScalarValue::Kind::Real: return v.value.real();
    case ScalarValue::Kind::Complex: return {{"re", v.value.real()}, {"im", v.value.imag()}};
    }
    return nullptr;
}

} // namespace

IdentityReport compare_exact(const std::string& name, const Rational& lhs, const Rational& rhs)
{
    IdentityReport r;
    r.name = name;
    r.mode = Mode::Exact;
    r.lhs = ScalarValue::of(lhs);
    r.rhs = ScalarValue::of(rhs);
    Rational diff = abs(lhs - rhs);
    r.abs_dev = diff.to_double();
    r.rel_dev = rhs.is_zero() ? r.abs_dev : (diff / abs(rhs)).to_double();
    r.pass = lhs == rhs;
    return r;
}

IdentityReport compare_numeric(const std::string& name, const Complex& lhs, const Complex& rhs, double tol)
{
    IdentityReport r;
    r.name = name;
    r.mode = Mode::Numeric;
    r.lhs = ScalarValue::of(lhs);
    r.rhs = ScalarValue::of(rhs);
    r.tolerance = tol;
    r.abs_dev = std::abs(lhs - rhs);
    double scale = std::abs(rhs);
    r.rel_dev = scale > 0.0 ? r.abs_dev / scale : r.abs_dev;
    r.pass = std::isfinite(r.rel_dev) && r.rel_dev <= tol;
    return r;
}

std::string scalar_list(const std::vector<Rational>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
    return out;
}

std::string scalar_list(const std::vector<double>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + to_string(xs[i]);
    return out;
}

std::string to_json_line(const IdentityReport& report)
{
    nlohmann::ordered_json j;
    j["name"] = report.name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = v;
    j["params"] = params;
    j["mode"] = report.mode == Mode::Exact ? "exact" : "numeric";
    j["lhs"] = scalar_json(report.lhs);
    j["rhs"] = scalar_json(report.rhs);
    j["abs_dev"] = report.abs_dev;
    j["rel_dev"] = report.rel_dev;
    j["cutoff"] = report.cutoff ? nlohmann::ordered_json(*report.cutoff) : nlohmann::ordered_json(nullptr);
    j["seed"] = report.seed ? nlohmann::ordered_json(*report.seed) : nlohmann::ordered_json(nullptr);
    if (report.mode == Mode::Numeric) j["tol"] = report.tolerance;
    j["pass"] = report.pass;
    if (!report.note.empty()) j["note"] = report.note;
    return j.dump();
}

} // namespace spinqw
