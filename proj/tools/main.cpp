#include "commands.hpp"

#include "nh/exactpoly.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

int main(int argc, char** argv)
{
    nhtool::RunConfig cfg;
    CLI::App app{"Exact checks for nested Hilbert schemes of points in the plane"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--n", cfg.n, "size parameter (part count for search-reducible)");
    app.add_option("--field", cfg.field, "Q, Z or a prime p");
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--samples", cfg.samples, "random samples")->capture_default_str();
    app.add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
    app.add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    app.add_option("--budget-pairs", cfg.budget_pairs, "S-pair budget")->capture_default_str();
    app.add_option("--budget-degree", cfg.budget_degree, "degree budget")->capture_default_str();
    static const std::map<std::string, std::string> about = {
        {"ideal", "build J by a route: division, closed-form or L"},
        {"verify-gb", "S-pair check of the claimed basis"},
        {"verify-initial", "in(J) = K by Buchberger"},
        {"verify-intermediate", "in(L^(j)) = K B^(j) for the given j"},
        {"fiber-check", "fiber membership against the rank conditions"},
        {"tangent", "tangent space of a nested pair (JSON on stdin)"},
        {"complex-facets", "enumerate and count c-facets"},
        {"complex-homology", "reduced homology and Reisner check"},
        {"bott-table", "cohomology table of the exterior powers"},
        {"bott-degree", "degree from the cohomology table"},
        {"deform-cleave", "cleaving families (JSON on stdin)"},
        {"deform-gin", "generic initial ideal or add-a-point (JSON on stdin)"},
        {"search-reducible", "search for a reducible nested scheme"},
    };
    for (const auto& name : nhtool::command_names()) {
        auto it = about.find(name);
        auto* sub = app.add_subcommand(name, it == about.end() ? "" : it->second);
        sub->add_option("args", cfg.args, "positional arguments");
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    nlohmann::json report;
    int code = 0;
    try {
        code = nhtool::run(cfg, std::cin, report);
    } catch (const nh::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    const std::string text = report.dump(2);
    if (cfg.out.empty()) {
        std::cout << text << '\n';
        std::cerr << nhtool::summarize(report) << '\n';
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.out << '\n';
            return 2;
        }
        f << text << '\n';
        std::cout << nhtool::summarize(report) << '\n';
    }
    return code;
}
