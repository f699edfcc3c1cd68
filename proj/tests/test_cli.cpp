#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(SPINFN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<nlohmann::json> lines(const std::string& out)
{
    std::vector<nlohmann::json> rows;
    std::size_t start = 0;
    while (start < out.size()) {
        std::size_t end = out.find('\n', start);
        if (end == std::string::npos) end = out.size();
        if (end > start) rows.push_back(nlohmann::json::parse(out.substr(start, end - start)));
        start = end + 1;
    }
    return rows;
}

} // namespace

TEST_CASE("compute prints one JSON line with exact routes")
{
    Run r = run("compute qw --q 1/2 --s 1/3 --x 1/5 --lambda 1");
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0]["value"] == "3/5");
    CHECK(rows[0]["mode"] == "exact");
    CHECK(rows[0]["agreement"] == true);

    Run empty = run("compute qw --q 1/2 --s 1/3 --x 1/5 --lambda \"\"");
    CHECK(empty.code == 0);
    CHECK(lines(empty.out)[0]["value"] == "1");

    Run hl = run("compute hl-f --q 1/2 --s 1/3 --u 1/4,1/5 --lambda 0,0");
    CHECK(hl.code == 0);
    CHECK(lines(hl.out)[0]["value"] == "135/308");
}

TEST_CASE("numeric compute and integral route")
{
    Run r = run("compute qw-integral --q 0.3 --s 0.2 --x 0.1 --lambda 1");
    CHECK(r.code == 0);
    auto row = lines(r.out).at(0);
    CHECK(row["mode"] == "numeric");
    CHECK(row["agreement"] == true);
}

TEST_CASE("exit codes")
{
    CHECK(run("compute qw --q 1/2 --s 1/3 --x 0.2 --lambda 1").code == 2);
    CHECK(run("compute qw --q 0.5 --s 0.3 --x 0.2 --lambda 1 --mode exact").code == 2);
    CHECK(run("verify ybe --q 0.3").code == 2);
    CHECK(run("verify no-such-identity").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("compute qw-integral --q 0.3 --s 0.2 --x 0.1 --lambda 5").code == 3);
    CHECK(run("verify hl-cauchy --q 0.3 --s 0.1 --u 2.0 --v 2.0").code == 3);
    CHECK(run("verify qw-cauchy --q 0.3 --s 0.2 --tol 1e-300").code == 1);
    CHECK(run("verify qw-cauchy --q 0.3 --s 0.2").code == 0);
}

TEST_CASE("verify is reproducible and --jobs keeps trial order")
{
    Run a = run("verify dual-cauchy --trials 4 --seed 9");
    Run b = run("verify dual-cauchy --trials 4 --seed 9 --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto rows = lines(a.out);
    REQUIRE(rows.size() == 4);
    for (int t = 0; t < 4; ++t) {
        CHECK(rows[t]["params"]["trial"] == std::to_string(t));
        CHECK(rows[t]["seed"] == 9);
        CHECK(rows[t]["abs_dev"] == 0.0);
    }
    Run c = run("verify dual-cauchy --trials 4 --seed 10");
    CHECK(c.out != a.out);
}

TEST_CASE("list-identities and selftest")
{
    Run list = run("list-identities");
    CHECK(list.code == 0);
    auto rows = lines(list.out);
    CHECK(rows.size() >= 16);
    bool found = false;
    for (const auto& row : rows) found = found || row["name"] == "fused-ybe";
    CHECK(found);
    CHECK(run("selftest").code == 0);
}
