// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pdae/problem.hpp"

namespace pdae::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitVerification = 3;

/// Built-in problems: "1", "2", "demo", "singular".
PdaeProblem problem_by_name(const std::string& name);

struct SolveOptions {
    std::string example = "1";
    double h = 0.1, tau = 0.1;
    int m1 = 2, m2 = 2;
    double x0 = 0.0, X = 1.0, t0 = 0.0, T = 1.0;
    std::string format = "text";  // text | json
};

struct SweepRow {
    std::string label;
    std::string example;
    double h = 0.1, tau = 0.1;
    double x0 = 0.0, X = 1.0, t0 = 0.0, T = 1.0;
    int m1 = 2, m2 = 2;
    std::optional<double> expected;
};

struct SweepConfig {
    std::vector<SweepRow> rows;
    std::string format = "table";  // table | csv | json
    double tolerance_factor = 3.0;
};

struct SweepOutcome {
    SweepRow row;
    std::optional<double> delta_u;
    std::string error;
};

struct AnalyzeOptions {
    std::string example = "1";
    int samples = 25;
    int m1 = 2, m2 = 2;
    double h = 0.1, tau = 0.1;
    double x0 = 0.0, X = 1.0, t0 = 0.0, T = 1.0;
};

struct VerifyOptions {
    // Default degree range is the one over which every suite check can hold:
    // the gamma-block eigenvalues keep positive real parts only through
    // degree 5 (Routh-Hurwitz in exact arithmetic), so larger ranges are
    // opt-in and report that check as failed.
    int m_max = 5;
};

/// Parses a sweep configuration document; throws argument_error on any
/// malformed or missing field.
SweepConfig parse_sweep_config(const std::string& json_text);

/// Runs the rows in order; numerical failures are recorded per row.
std::vector<SweepOutcome> run_sweep_rows(const SweepConfig& config);

/// Full-precision CSV with columns N,h,tau,t0,T,x0,X,m1,m2,delta_u.
std::string format_sweep_csv(const std::vector<SweepOutcome>& outcomes);

/// Inverse of format_sweep_csv (error annotations are not representable).
std::vector<SweepOutcome> parse_sweep_csv(const std::string& csv);

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int run_sweep(const std::string& config_path, const std::string& format_override,
              std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace pdae::cli
