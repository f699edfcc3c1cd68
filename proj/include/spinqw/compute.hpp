#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinqw/report.hpp"

namespace spinqw {

// One function evaluation requested by name, with every available route.
struct ComputeRequest {
    std::string function;
    std::map<std::string, std::string> values;
    std::optional<Mode> mode;
    double radius = 1.0;
    int nodes = 64;
    double tol = 1e-8;
};

struct ComputeResult {
    std::string function;
    std::vector<std::pair<std::string, std::string>> inputs;
    Mode mode = Mode::Exact;
    ScalarValue value;
    std::vector<std::pair<std::string, ScalarValue>> routes;
    bool agreement = true;
};

const std::vector<std::string>& compute_functions();

ComputeResult compute(const ComputeRequest& request);

std::string to_json_line(const ComputeResult& result);

} // namespace spinqw
