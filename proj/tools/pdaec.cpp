// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pdae/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"pdaec: collocation solver and pencil diagnostics for linear PDAE systems"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    const std::vector<std::string> examples = {"1", "2", "demo", "singular"};

    pdae::cli::SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "solve one problem on one grid");
    solve->set_help_flag("--help", "print this help and exit");
    solve->add_option("--example", solve_opt.example, "built-in problem name")
        ->check(CLI::IsMember(examples));
    solve->add_option("--h", solve_opt.h, "x step")->check(CLI::PositiveNumber);
    solve->add_option("--tau", solve_opt.tau, "t step")->check(CLI::PositiveNumber);
    solve->add_option("--m1", solve_opt.m1, "cell degree in x")->check(CLI::Range(1, 10));
    solve->add_option("--m2", solve_opt.m2, "cell degree in t")->check(CLI::Range(1, 10));
    solve->add_option("--x0", solve_opt.x0, "left x boundary");
    solve->add_option("--X", solve_opt.X, "right x boundary");
    solve->add_option("--t0", solve_opt.t0, "initial time");
    solve->add_option("--T", solve_opt.T, "final time");
    solve->add_option("--format", solve_opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string sweep_config;
    std::string sweep_format;
    CLI::App* sweep = app.add_subcommand("sweep", "run every row of a JSON sweep config");
    sweep->set_help_flag("--help", "print this help and exit");
    sweep->add_option("config", sweep_config, "path to the sweep config")->required();
    sweep->add_option("--format", sweep_format, "override the configured output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    pdae::cli::AnalyzeOptions analyze_opt;
    CLI::App* analyze = app.add_subcommand("analyze", "matrix pencil and stability diagnostics");
    analyze->set_help_flag("--help", "print this help and exit");
    analyze->add_option("--example", analyze_opt.example, "built-in problem name")
        ->check(CLI::IsMember(examples));
    analyze->add_option("--samples", analyze_opt.samples, "number of interior sample points")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--m1", analyze_opt.m1, "cell degree in x")->check(CLI::Range(1, 10));
    analyze->add_option("--m2", analyze_opt.m2, "cell degree in t")->check(CLI::Range(1, 10));
    analyze->add_option("--h", analyze_opt.h, "x step (sets r = tau/h)")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--tau", analyze_opt.tau, "t step (sets r = tau/h)")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--x0", analyze_opt.x0, "left x boundary");
    analyze->add_option("--X", analyze_opt.X, "right x boundary");
    analyze->add_option("--t0", analyze_opt.t0, "initial time");
    analyze->add_option("--T", analyze_opt.T, "final time");

    pdae::cli::VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run the scheme verification suite");
    verify->set_help_flag("--help", "print this help and exit");
    verify->add_option("--m-max", verify_opt.m_max, "largest cell degree to check")
        ->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pdae::cli::kExitUsage;
    }

    if (solve->parsed()) return pdae::cli::run_solve(solve_opt, std::cout, std::cerr);
    if (sweep->parsed()) return pdae::cli::run_sweep(sweep_config, sweep_format, std::cout, std::cerr);
    if (analyze->parsed()) return pdae::cli::run_analyze(analyze_opt, std::cout, std::cerr);
    return pdae::cli::run_verify(verify_opt, std::cout, std::cerr);
}
