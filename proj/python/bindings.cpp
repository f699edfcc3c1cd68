#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinqw/checks.hpp"
#include "spinqw/compute.hpp"
#include "spinqw/errors.hpp"

namespace py = pybind11;
using namespace spinqw;

namespace {

std::optional<Mode> mode_from(const std::optional<std::string>& text)
{
    if (!text) return std::nullopt;
    if (*text == "exact") return Mode::Exact;
    if (*text == "numeric") return Mode::Numeric;
    throw UsageError("mode must be 'exact' or 'numeric'");
}

} // namespace

PYBIND11_MODULE(_spinqw, m)
{
    m.doc() = "Spin Hall-Littlewood and spin q-Whittaker functions: evaluation and identity checks.";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

    m.def(
        "compute_json",
        [](const std::string& function, const std::map<std::string, std::string>& values,
           const std::optional<std::string>& mode, double radius, int nodes, double tol) {
            ComputeRequest req;
            req.function = function;
            req.values = values;
            req.mode = mode_from(mode);
            req.radius = radius;
            req.nodes = nodes;
            req.tol = tol;
            ComputeResult result;
            {
                py::gil_scoped_release release;
                result = compute(req);
            }
            return to_json_line(result);
        },
        py::arg("function"), py::arg("values"), py::arg("mode") = py::none(), py::arg("radius") = 1.0,
        py::arg("nodes") = 64, py::arg("tol") = 1e-8);

    m.def(
        "verify_json",
        [](const std::string& name, const std::map<std::string, std::string>& values, int trials,
           std::uint64_t seed, int cutoff, double tol, int m_len, int n_len, const std::optional<std::string>& mode) {
            VerifyRequest req;
            req.name = name;
            req.values = values;
            req.mode = mode_from(mode);
            req.seed = seed;
            req.cutoff = cutoff;
            req.tol = tol;
            req.m = m_len;
            req.n = n_len;
            resolve_mode(req);
            std::vector<std::string> lines;
            py::gil_scoped_release release;
            for (int t = 0; t < trials; ++t) lines.push_back(to_json_line(run_check(req, t)));
            return lines;
        },
        py::arg("name"), py::arg("values"), py::arg("trials") = 1, py::arg("seed") = 0, py::arg("cutoff") = 30,
        py::arg("tol") = 1e-10, py::arg("m") = -1, py::arg("n") = -1, py::arg("mode") = py::none());

    m.def("identity_names", [] {
        std::vector<std::string> names;
        for (const auto& info : check_registry()) names.push_back(info.name);
        return names;
    });
    m.def("function_names", [] { return compute_functions(); });
}
