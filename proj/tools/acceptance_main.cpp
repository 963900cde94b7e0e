// Prints one line per acceptance criterion; failing checks follow their line.
#include "su3/acceptance.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> ids;
    su3::AcceptanceOptions opt;
    bool verbose = false;
    app.add_option("criteria", ids, "criterion numbers (default: all)")->check(CLI::Range(1, su3::criterion_count));
    app.add_option("--max-level", opt.max_level, "skip items above this level");
    app.add_flag("-v,--verbose", verbose, "print every check");
    CLI11_PARSE(app, argc, argv);
    if (ids.empty())
        for (int i = 1; i <= su3::criterion_count; ++i) ids.push_back(i);

    bool all = true;
    for (int id : ids) {
        const auto res = su3::run_criterion(id, opt);
        const bool ok = res.report.passed();
        all = all && ok;
        std::printf("criterion %2d: %s  %s  (%.1fs)\n", id, ok ? "PASS" : "FAIL", res.title.c_str(), res.seconds);
        for (const auto& c : res.report.checks) {
            if (!verbose && c.status != su3::Status::fail) continue;
            std::printf("    [%s] %s: expected %s, got %s\n", su3::to_string(c.status).c_str(), c.name.c_str(), c.expected.c_str(),
                        c.actual.c_str());
        }
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
