#include "commands.hpp"

#include "nh/exactpoly.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
    int code = -1;
    json report;
};

Result run_cmd(const std::string& command, std::vector<std::string> args = {}, int n = 0,
               const std::string& payload = "", std::uint64_t seed = 0)
{
    nhtool::RunConfig cfg;
    cfg.command = command;
    cfg.args = std::move(args);
    cfg.n = n;
    cfg.seed = seed;
    cfg.samples = 60;
    std::istringstream in(payload);
    Result r;
    r.code = nhtool::run(cfg, in, r.report);
    return r;
}

}  // namespace

TEST_CASE("report schema")
{
    auto r = run_cmd("bott-degree");
    CHECK(r.code == 0);
    for (const char* key : {"schema", "command", "params", "status", "values", "witnesses", "timing_ms"})
        CHECK(r.report.contains(key));
    CHECK(r.report["schema"] == "1");
    CHECK(r.report["values"]["degree"] == "50");
    CHECK(nhtool::summarize(r.report) == "bott-degree: pass, degree 50 (formula 50)");
}

TEST_CASE("every command is registered")
{
    const auto& names = nhtool::command_names();
    for (const char* c : {"ideal", "verify-gb", "verify-initial", "verify-intermediate", "fiber-check", "tangent",
                          "complex-facets", "complex-homology", "bott-table", "bott-degree", "deform-cleave",
                          "deform-gin", "search-reducible"})
        CHECK(std::find(names.begin(), names.end(), c) != names.end());
}

TEST_CASE("small verification commands pass")
{
    CHECK(run_cmd("verify-initial", {}, 2).code == 0);
    CHECK(run_cmd("ideal", {"division"}, 3).code == 0);
    CHECK(run_cmd("bott-table", {}, 5).code == 0);
    auto f = run_cmd("complex-facets");
    CHECK(f.code == 0);
    CHECK(f.report["values"]["total"] == 130);
    CHECK(f.report["values"]["last_column"] == 80);
    auto h = run_cmd("complex-homology", {}, 2);
    CHECK(h.code == 0);
    CHECK(h.report["values"]["claim"] == "cohen-macaulay");
    auto r = run_cmd("search-reducible");
    CHECK(r.report["values"]["r"] == 19);
}

TEST_CASE("exit code is 0 exactly when the status is pass")
{
    for (const auto& r : {run_cmd("bott-degree", {}, 6), run_cmd("fiber-check", {}, 3),
                          run_cmd("deform-cleave", {}, 0, R"({"I":["x^2","y^2"],"J":["x","y^2"]})")}) {
        bool pass = r.report["status"] == "pass";
        CHECK((r.code == 0) == pass);
    }
}

TEST_CASE("identical runs give identical reports")
{
    auto strip = [](json j) {
        j.erase("timing_ms");
        return j;
    };
    auto a = run_cmd("fiber-check", {}, 3, "", 9), b = run_cmd("fiber-check", {}, 3, "", 9);
    CHECK(strip(a.report) == strip(b.report));
    const std::string p = R"({"I":["y - x^2","x^3"]})";
    CHECK(strip(run_cmd("deform-gin", {}, 0, p, 4).report) == strip(run_cmd("deform-gin", {}, 0, p, 4).report));
}

TEST_CASE("payload commands")
{
    auto t = run_cmd("tangent", {}, 0, R"({"I1":["x^2","y^2"],"I2":["x","y^2"]})");
    CHECK(t.code == 0);
    CHECK(t.report["values"]["dim"] == 8);

    auto g = run_cmd("deform-gin", {}, 0, R"({"I":["y - x^2","x^3"]})", 1);
    CHECK(g.code == 0);
    CHECK(g.report["values"]["gin"] == json::array({"y^2", "x*y", "x^2"}));

    auto ap = run_cmd("deform-gin", {}, 0, R"({"B":["x^2","x*y","y^2"]})", 3);
    CHECK(ap.code == 0);
    CHECK(ap.report["values"]["predicted"].size() == 3);

    auto ok = run_cmd("deform-cleave", {}, 0, R"({"I":["x","y^4"],"J":["x","y^2"]})");
    CHECK(ok.code == 0);
    auto bad = run_cmd("deform-cleave", {}, 0, R"({"I":["x^2","y^2"],"J":["x","y^2"]})");
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.report["witnesses"].empty());
}

TEST_CASE("usage errors")
{
    json rep;
    std::istringstream none;
    nhtool::RunConfig cfg;
    cfg.command = "no-such-command";
    CHECK_THROWS_AS(nhtool::run(cfg, none, rep), nhtool::UsageError);
    CHECK_THROWS_AS(run_cmd("ideal", {"sideways"}, 2), nhtool::UsageError);
    CHECK_THROWS_AS(run_cmd("tangent", {}, 0, "not json"), nhtool::UsageError);
    CHECK_THROWS_AS(run_cmd("tangent", {}, 0, R"({"I1":["x"]})"), nhtool::UsageError);
    CHECK_THROWS_AS(run_cmd("search-reducible", {}, 4), nhtool::UsageError);
    try {
        run_cmd("tangent", {}, 0, R"({"I1":["x + + y"],"I2":["x","y"]})");
        FAIL("expected a parse error");
    } catch (const nh::ParseError& e) {
        CHECK(e.position() == 4);
    }
}
