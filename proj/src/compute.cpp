#include "spinqw/compute.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "spinqw/contour.hpp"
#include "spinqw/errors.hpp"
#include "spinqw/inputs.hpp"
#include "spinqw/spin_hl.hpp"
#include "spinqw/spin_qw.hpp"

namespace spinqw {

namespace {

struct FunctionInfo {
    std::string name;
    std::string variables; // key of the spectral list
    bool exact;
};

const std::vector<FunctionInfo>& function_table()
{
    static const std::vector<FunctionInfo> table = {
        {"qw", "x", true},      {"qw-dual", "x", true},      {"hl-f", "u", true},
        {"hl-g", "v", true},    {"hl-gstar", "v", true},     {"stable-f", "u", true},
        {"stable-fstar", "v", true}, {"qw-integral", "x", false},
    };
    return table;
}

const FunctionInfo& find_function(const std::string& name)
{
    for (const auto& f : function_table())
        if (f.name == name) return f;
    throw UsageError("unknown function '" + name + "'");
}

std::string value_text(const std::map<std::string, std::string>& values, const std::string& key,
                       const std::string& fallback = {})
{
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
}

template <class T>
struct Inputs {
    T q, s;
    std::vector<T> vars;
    Partition lambda, mu;
};

template <class T>
Inputs<T> read_inputs(const ComputeRequest& req, const FunctionInfo& info)
{
    for (const char* key : {"q", "s", "lambda"})
        if (!req.values.count(key)) throw UsageError(info.name + " needs --" + key);
    if (!req.values.count(info.variables)) throw UsageError(info.name + " needs --" + info.variables);
    Inputs<T> in;
    auto q = parse_scalar_list<T>(req.values.at("q"));
    auto s = parse_scalar_list<T>(req.values.at("s"));
    if (q.size() != 1 || s.size() != 1) throw UsageError("--q and --s take a single value");
    in.q = q[0];
    in.s = s[0];
    in.vars = parse_scalar_list<T>(req.values.at(info.variables));
    in.lambda = parse_partition_arg(req.values.at("lambda"));
    in.mu = parse_partition_arg(value_text(req.values, "mu"));
    return in;
}

template <class T>
ScalarValue scalar_of(const T& v)
{
    return ScalarValue::of(v);
}

template <class T>
bool agree(const T& a, const T& b, double tol)
{
    if constexpr (std::is_same_v<T, Rational>)
        return a == b;
    else
        return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

template <class T>
void evaluate(const ComputeRequest& req, const FunctionInfo& info, ComputeResult& out)
{
    Inputs<T> in = read_inputs<T>(req, info);
    const auto& [q, s, vars, lambda, mu] = in;
    std::vector<std::pair<std::string, T>> routes;
    const std::string& f = info.name;
    if (f == "qw") {
        routes = {{"branching", qw_F(q, s, vars, lambda, mu, Route::Branching)},
                  {"lattice", qw_F(q, s, vars, lambda, mu, Route::Lattice)}};
    } else if (f == "qw-dual") {
        routes = {{"branching", qw_F_star(q, s, vars, lambda, mu, Route::Branching)},
                  {"lattice", qw_F_star(q, s, vars, lambda, mu, Route::Lattice)},
                  {"normalisation", qw_F_star_normalized(q, s, vars, lambda, mu)}};
    } else if (f == "hl-f") {
        require(lambda.size() == mu.size() + vars.size(),
                "hl-f: lambda needs size(mu) + number of u's parts, zeros included");
        routes = {{"lattice", hl_F(q, s, vars, lambda, mu)}};
    } else if (f == "hl-g") {
        Partition base = req.values.count("mu") ? mu : Partition(std::vector<int>(lambda.size(), 0));
        require(lambda.size() == base.size(), "hl-g: lambda and mu need the same number of parts");
        routes = {{"lattice", hl_G(q, s, vars, lambda, base)}};
    } else if (f == "hl-gstar") {
        Partition base = req.values.count("mu") ? mu : Partition(std::vector<int>(lambda.size(), 0));
        require(lambda.size() == base.size(), "hl-gstar: lambda and mu need the same number of parts");
        routes = {{"normalisation", hl_G_star(q, s, vars, lambda, base)},
                  {"lattice", hl_G_star_lattice(q, s, vars, lambda, base)}};
    } else if (f == "stable-f") {
        routes = {{"lattice", stable_F(q, s, vars, lambda, mu)}};
        bool distinct = true;
        for (std::size_t a = 0; a < vars.size(); ++a)
            for (std::size_t b = a + 1; b < vars.size(); ++b) distinct &= !(vars[a] == vars[b]);
        if (mu.length() == 0 && distinct && lambda.length() <= static_cast<int>(vars.size()))
            routes.emplace_back("symmetrization", stable_F_symmetrization(q, s, vars, lambda));
    } else if (f == "stable-fstar") {
        routes = {{"normalisation", stable_F_star(q, s, vars, lambda, mu)},
                  {"lattice", stable_F_star_lattice(q, s, vars, lambda, mu)}};
    }
    out.value = scalar_of(routes.front().second);
    for (const auto& [name, v] : routes) {
        out.routes.emplace_back(name, scalar_of(v));
        out.agreement = out.agreement && agree(v, routes.front().second, req.tol);
    }
}

void evaluate_integral(const ComputeRequest& req, const FunctionInfo& info, ComputeResult& out)
{
    Inputs<double> in = read_inputs<double>(req, info);
    require(in.mu.length() == 0, "qw-integral: the integral formula is for non-skew lambda");
    ContourSpec spec{req.radius, req.nodes};
    Complex integral = qw_integral(in.q, in.s, in.vars, in.lambda, spec);
    double exact = qw_F(in.q, in.s, in.vars, in.lambda);
    out.value = ScalarValue::of(integral);
    out.routes = {{"integral", ScalarValue::of(integral)}, {"branching", ScalarValue::of(exact)}};
    out.agreement = std::abs(integral - exact) <= req.tol * std::max(1.0, std::abs(exact));
}

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

const std::vector<std::string>& compute_functions()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& f : function_table()) out.push_back(f.name);
        return out;
    }();
    return names;
}

ComputeResult compute(const ComputeRequest& request)
{
    const FunctionInfo& info = find_function(request.function);
    ComputeResult out;
    out.function = info.name;
    out.mode = implied_mode(request.values, request.mode, info.exact ? Mode::Exact : Mode::Numeric);
    if (!info.exact && out.mode == Mode::Exact) throw UsageError(info.name + " runs in numeric mode only");
    for (const auto& [k, v] : request.values) out.inputs.emplace_back(k, v);
    if (!info.exact) {
        out.inputs.emplace_back("radius", to_string(request.radius));
        out.inputs.emplace_back("nodes", std::to_string(request.nodes));
        evaluate_integral(request, info, out);
    } else if (out.mode == Mode::Exact) {
        evaluate<Rational>(request, info, out);
    } else {
        evaluate<double>(request, info, out);
    }
    return out;
}

std::string to_json_line(const ComputeResult& result)
{
    nlohmann::ordered_json j;
    j["function"] = result.function;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : result.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["mode"] = result.mode == Mode::Exact ? "exact" : "numeric";
    j["value"] = scalar_json(result.value);
    nlohmann::ordered_json routes = nlohmann::ordered_json::object();
    for (const auto& [k, v] : result.routes) routes[k] = scalar_json(v);
    j["routes"] = routes;
    j["agreement"] = result.agreement;
    return j.dump();
}

} // namespace spinqw
