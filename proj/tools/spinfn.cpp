#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinqw/checks.hpp"
#include "spinqw/compute.hpp"
#include "spinqw/errors.hpp"

namespace {

using namespace spinqw;

enum ExitCode { kPass = 0, kIdentityFailure = 1, kUsage = 2, kPrecondition = 3 };

struct Options {
    std::map<std::string, std::optional<std::string>> values{{"q", {}},  {"s", {}},      {"u", {}},  {"v", {}},
                                                              {"x", {}},  {"y", {}},      {"lambda", {}},
                                                              {"mu", {}}, {"nu", {}}};
    std::string mode;
    int cutoff = 30;
    std::optional<double> tol;
    int trials = 1;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
    int m = -1, n = -1;
    double radius = 1.0;
    int nodes = 64;
    std::string out;
    std::string target;

    std::map<std::string, std::string> given() const
    {
        std::map<std::string, std::string> out_values;
        for (const auto& [k, v] : values)
            if (v) out_values[k] = *v;
        return out_values;
    }

    std::optional<Mode> requested_mode() const
    {
        if (mode.empty()) return std::nullopt;
        return mode == "exact" ? Mode::Exact : Mode::Numeric;
    }
};

void add_point_options(CLI::App* cmd, Options& opt)
{
    for (auto& [key, slot] : opt.values) {
        std::string help = key == "lambda" || key == "mu" || key == "nu" ? "partition, comma separated"
                                                                          : "value or comma separated list";
        cmd->add_option("--" + key, slot, help)->allow_extra_args(false);
    }
    cmd->add_option("--mode", opt.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
    cmd->add_option("--tol", opt.tol, "tolerance for numeric comparisons")->check(CLI::PositiveNumber);
    cmd->add_option("--out", opt.out, "write JSON lines to this file instead of stdout");
}

std::uint64_t default_seed()
{
    const char* env = std::getenv("SPINFN_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("SPINFN_SEED is not an unsigned integer: '") + env + "'");
    }
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

int run_compute(const Options& opt)
{
    ComputeRequest req;
    req.function = opt.target;
    req.values = opt.given();
    req.mode = opt.requested_mode();
    req.radius = opt.radius;
    req.nodes = opt.nodes;
    if (opt.tol) req.tol = *opt.tol;
    ComputeResult result = compute(req);
    Output out(opt.out);
    out.stream() << to_json_line(result) << "\n";
    return result.agreement ? kPass : kIdentityFailure;
}

// Trials run on `jobs` threads; reports come back ordered by trial index.
std::vector<IdentityReport> run_trials(const VerifyRequest& req, int trials, int jobs)
{
    std::vector<std::optional<IdentityReport>> results(trials);
    std::vector<std::exception_ptr> errors(trials);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < trials; t = next++) {
            try {
                results[t] = run_check(req, t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };
    int threads = std::max(1, std::min(jobs, trials));
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<IdentityReport> reports;
    for (int t = 0; t < trials; ++t) {
        if (errors[t]) std::rethrow_exception(errors[t]);
        reports.push_back(*results[t]);
    }
    return reports;
}

VerifyRequest make_request(const Options& opt, const std::string& name)
{
    VerifyRequest req;
    req.name = name;
    req.values = opt.given();
    req.mode = opt.requested_mode();
    req.m = opt.m;
    req.n = opt.n;
    req.cutoff = opt.cutoff;
    if (opt.tol) req.tol = *opt.tol;
    req.seed = opt.seed ? *opt.seed : default_seed();
    return req;
}

int run_verify(const Options& opt)
{
    VerifyRequest req = make_request(opt, opt.target);
    resolve_mode(req);
    auto reports = run_trials(req, opt.trials, opt.jobs);
    Output out(opt.out);
    bool all = true;
    for (const auto& r : reports) {
        out.stream() << to_json_line(r) << "\n";
        all = all && r.pass;
    }
    return all ? kPass : kIdentityFailure;
}

int run_list(const Options& opt)
{
    Output out(opt.out);
    for (const auto& info : check_registry()) {
        nlohmann::ordered_json j;
        j["name"] = info.name;
        j["description"] = info.description;
        nlohmann::ordered_json modes = nlohmann::ordered_json::array();
        if (info.exact) modes.push_back("exact");
        if (info.numeric) modes.push_back("numeric");
        j["modes"] = modes;
        out.stream() << j.dump() << "\n";
    }
    return kPass;
}

// One trial of every registered check at the default settings.
int run_selftest(const Options& opt)
{
    Output out(opt.out);
    bool all = true;
    for (const auto& info : check_registry()) {
        VerifyRequest req;
        req.name = info.name;
        req.seed = opt.seed ? *opt.seed : default_seed();
        IdentityReport r = run_check(req, 0);
        out.stream() << to_json_line(r) << "\n";
        all = all && r.pass;
    }
    return all ? kPass : kIdentityFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"spinfn: spin Hall-Littlewood and spin q-Whittaker functions and their identities"};
    app.require_subcommand(1);
    Options opt;

    auto* compute_cmd = app.add_subcommand("compute", "evaluate a function by every available route");
    compute_cmd->add_option("function", opt.target, "qw, qw-dual, hl-f, hl-g, hl-gstar, stable-f, stable-fstar, qw-integral")
        ->required();
    add_point_options(compute_cmd, opt);
    compute_cmd->add_option("--radius", opt.radius, "contour radius for qw-integral");
    compute_cmd->add_option("--nodes", opt.nodes, "quadrature nodes per circle for qw-integral");

    auto* verify_cmd = app.add_subcommand("verify", "check an identity at seeded or given parameter points");
    verify_cmd->add_option("identity", opt.target, "name from list-identities")->required();
    add_point_options(verify_cmd, opt);
    verify_cmd->add_option("--cutoff", opt.cutoff, "truncation of infinite sums")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--trials", opt.trials, "number of parameter points")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", opt.seed, "seed for sampled parameters (default $SPINFN_SEED or 0)");
    verify_cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--m", opt.m, "length of the first variable list when sampled")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--n", opt.n, "length of the second variable list when sampled")->check(CLI::NonNegativeNumber);

    auto* list_cmd = app.add_subcommand("list-identities", "print the names accepted by verify");
    list_cmd->add_option("--out", opt.out, "write JSON lines to this file instead of stdout");

    auto* self_cmd = app.add_subcommand("selftest", "one trial of every identity");
    self_cmd->add_option("--seed", opt.seed, "seed for sampled parameters");
    self_cmd->add_option("--out", opt.out, "write JSON lines to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*compute_cmd) return run_compute(opt);
        if (*verify_cmd) return run_verify(opt);
        if (*list_cmd) return run_list(opt);
        if (*self_cmd) return run_selftest(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const DivisionByZero& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
