#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hochbv/commands.hpp"

namespace {

struct SubSpec {
    std::string name;
    std::string help;
    bool algebra = false;
    bool hip = false;
    bool dual = false;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hochschild cochain / BV computations over GF(2)"};
    app.require_subcommand(1);

    hochbv::RunConfig cfg;

    const std::vector<SubSpec> subs = {
        {"check-dga", "verify the dg-algebra and bimodule axioms of an algebra", true, false, false},
        {"verify-hip", "check that a catalog inner product satisfies DF = 0 at the bound", false, true, false},
        {"local-identities", "check the 0-, 1- and 2-simplex boundary identities", false, false, false},
        {"hh-basis", "print truncated Hochschild cohomology dimensions per degree", true, false, true},
        {"bv-table", "emit the labeled product / Delta table for a named structure", false, true, false},
        {"compare-bv", "search for BV isomorphisms against the string topology table", false, false, false},
        {"counterexample", "run the non-Poincare-duality inner product pipeline", false, false, false},
        {"report-all", "run every command with its default configuration", false, false, false},
    };

    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        if (s.algebra)
            sub->add_option("--algebra", cfg.algebra,
                            "builtin algebra name or file:<path>");
        if (s.hip)
            sub->add_option("--hip", cfg.hip, "catalog inner product name");
        if (s.dual)
            sub->add_flag("--dual", cfg.dual_coefficients,
                          "use dual bimodule coefficients");
        sub->add_option("--bound", cfg.bound, "arity / expansion bound")
            ->check(CLI::PositiveNumber);
        sub->add_option("--k-max", cfg.k_max, "largest table index k")
            ->check(CLI::PositiveNumber);
        sub->add_option("--degree-min", cfg.degree_min, "lower end of the degree window");
        sub->add_option("--degree-max", cfg.degree_max, "upper end of the degree window");
        sub->add_option("--format", cfg.format, "report format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", cfg.out, "write the report to this file");
        sub->add_flag("--timing", cfg.timing, "measure wall time into timing_ms");
    }

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.degree_min > cfg.degree_max) {
        std::cerr << "error: --degree-min exceeds --degree-max\n";
        return 2;
    }

    try {
        hochbv::Report report = hochbv::run_command(cfg);
        return hochbv::emit_report(report, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
