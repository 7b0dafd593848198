// SPDX-License-Identifier: Apache-2.0
#include "pdae/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pdae/errors.hpp"
#include "pdae/pencil.hpp"
#include "pdae/solver.hpp"
#include "pdae/theory.hpp"

namespace pdae::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

// Full-precision decimal form; strtod of the result restores the exact bits.
std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sci3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double parse_double(const std::string& s, const std::string& what) {
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw argument_error("cannot parse " + what + " from '" + s + "'");
    return v;
}

int parse_int(const std::string& s, const std::string& what) {
    double v = parse_double(s, what);
    int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) throw argument_error(what + " must be an integer, got '" + s + "'");
    return i;
}

bool known_format(const std::string& f) { return f == "table" || f == "csv" || f == "json"; }

void check_degree(int m, const char* what) {
    if (m < 1 || m > 10) {
        throw argument_error(std::string(what) + " must lie in 1..10, got " + std::to_string(m));
    }
}

std::string json_label(const nlohmann::json& v, int index) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v.get<double>());
        return buf;
    }
    throw argument_error("row " + std::to_string(index) + ": N must be a string or number");
}

double json_number(const nlohmann::json& row, const char* key, int index,
                   std::optional<double> fallback) {
    if (!row.contains(key)) {
        if (fallback) return *fallback;
        throw argument_error("row " + std::to_string(index) + " is missing field '" + key + "'");
    }
    const auto& v = row.at(key);
    if (!v.is_number())
        throw argument_error("row " + std::to_string(index) + ": field '" + key + "' must be a number");
    return v.get<double>();
}

int json_integer(const nlohmann::json& row, const char* key, int index, int fallback) {
    if (!row.contains(key)) return fallback;
    const auto& v = row.at(key);
    if (!v.is_number_integer())
        throw argument_error("row " + std::to_string(index) + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

void set_optional(ordered_json& j, const char* key, const std::optional<double>& v) {
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

void write_table(const std::vector<SweepOutcome>& outcomes, std::ostream& out) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%4s %9s %9s %6s %6s %6s %6s %3s %3s %10s\n", "N", "h", "tau",
                  "t0", "T", "x0", "X", "m1", "m2", "delta_u");
    out << buf;
    for (const auto& oc : outcomes) {
        const SweepRow& r = oc.row;
        std::string delta = oc.delta_u ? sci3(*oc.delta_u) : std::string("n/a");
        std::snprintf(buf, sizeof buf, "%4s %9g %9g %6g %6g %6g %6g %3d %3d %10s\n",
                      r.label.c_str(), r.h, r.tau, r.t0, r.T, r.x0, r.X, r.m1, r.m2, delta.c_str());
        out << buf;
    }
}

ordered_json sweep_json(const std::vector<SweepOutcome>& outcomes) {
    ordered_json rows = ordered_json::array();
    for (const auto& oc : outcomes) {
        ordered_json j;
        j["N"] = oc.row.label;
        j["h"] = oc.row.h;
        j["tau"] = oc.row.tau;
        j["t0"] = oc.row.t0;
        j["T"] = oc.row.T;
        j["x0"] = oc.row.x0;
        j["X"] = oc.row.X;
        j["m1"] = oc.row.m1;
        j["m2"] = oc.row.m2;
        set_optional(j, "delta_u", oc.delta_u);
        if (!oc.error.empty()) j["error"] = oc.error;
        rows.push_back(std::move(j));
    }
    return rows;
}

}  // namespace

PdaeProblem problem_by_name(const std::string& name) {
    if (name == "1") return example1();
    if (name == "2") return example2();
    if (name == "demo") return nondegenerate_demo();
    if (name == "singular") return singular_fixture();
    throw argument_error("unknown example '" + name + "' (expected 1, 2, demo, or singular)");
}

SweepConfig parse_sweep_config(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw argument_error(std::string("sweep config is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw argument_error("sweep config must be a JSON object");
        SweepConfig cfg;
        if (doc.contains("output_format")) {
            if (!doc.at("output_format").is_string())
                throw argument_error("output_format must be a string");
            cfg.format = doc.at("output_format").get<std::string>();
            if (!known_format(cfg.format))
                throw argument_error("output_format must be table, csv, or json");
        }
        if (doc.contains("tolerance_factor")) {
            if (!doc.at("tolerance_factor").is_number())
                throw argument_error("tolerance_factor must be a number");
            cfg.tolerance_factor = doc.at("tolerance_factor").get<double>();
            if (!(cfg.tolerance_factor >= 1.0))
                throw argument_error("tolerance_factor must be at least 1");
        }
        if (!doc.contains("rows") || !doc.at("rows").is_array() || doc.at("rows").empty())
            throw argument_error("sweep config needs a non-empty 'rows' array");

        int index = 0;
        for (const auto& item : doc.at("rows")) {
            ++index;
            if (!item.is_object())
                throw argument_error("row " + std::to_string(index) + " must be a JSON object");
            SweepRow row;
            row.label = item.contains("N") ? json_label(item.at("N"), index) : std::to_string(index);
            if (!item.contains("example"))
                throw argument_error("row " + std::to_string(index) + " is missing field 'example'");
            row.example = json_label(item.at("example"), index);
            row.h = json_number(item, "h", index, std::nullopt);
            row.tau = json_number(item, "tau", index, std::nullopt);
            row.x0 = json_number(item, "x0", index, 0.0);
            row.X = json_number(item, "X", index, 1.0);
            row.t0 = json_number(item, "t0", index, 0.0);
            row.T = json_number(item, "T", index, 1.0);
            row.m1 = json_integer(item, "m1", index, 2);
            row.m2 = json_integer(item, "m2", index, 2);
            if (item.contains("expected_delta_u")) {
                double e = json_number(item, "expected_delta_u", index, std::nullopt);
                if (!(e > 0.0))
                    throw argument_error("row " + std::to_string(index) +
                                         ": expected_delta_u must be positive");
                row.expected = e;
            }
            check_degree(row.m1, "m1");
            check_degree(row.m2, "m2");
            problem_by_name(row.example);
            GridSpec grid = GridSpec::make(row.x0, row.X, row.t0, row.T, row.h, row.tau);
            if (row.m1 > grid.n1 || row.m2 > grid.n2)
                throw argument_error("row " + std::to_string(index) +
                                     ": cell degrees exceed the grid extent");
            cfg.rows.push_back(std::move(row));
        }
        return cfg;
    } catch (const argument_error&) {
        throw;
    } catch (const std::exception& e) {
        throw argument_error(std::string("sweep config: ") + e.what());
    }
}

std::vector<SweepOutcome> run_sweep_rows(const SweepConfig& config) {
    std::vector<SweepOutcome> outcomes;
    outcomes.reserve(config.rows.size());
    for (const auto& row : config.rows) {
        SweepOutcome oc;
        oc.row = row;
        try {
            PdaeProblem pr = problem_by_name(row.example);
            GridSpec grid = GridSpec::make(row.x0, row.X, row.t0, row.T, row.h, row.tau);
            auto [sol, report] = solver::march(pr, grid, row.m1, row.m2);
            (void)sol;
            oc.delta_u = report.delta_u;
            if (!report.delta_u) oc.error = "problem has no reference solution";
        } catch (const numerical_error& e) {
            oc.error = e.what();
        } catch (const singular_error& e) {
            oc.error = e.what();
        }
        outcomes.push_back(std::move(oc));
    }
    return outcomes;
}

std::string format_sweep_csv(const std::vector<SweepOutcome>& outcomes) {
    std::string s = "N,h,tau,t0,T,x0,X,m1,m2,delta_u\n";
    for (const auto& oc : outcomes) {
        const SweepRow& r = oc.row;
        s += r.label;
        s += ',';
        s += full(r.h);
        s += ',';
        s += full(r.tau);
        s += ',';
        s += full(r.t0);
        s += ',';
        s += full(r.T);
        s += ',';
        s += full(r.x0);
        s += ',';
        s += full(r.X);
        s += ',';
        s += std::to_string(r.m1);
        s += ',';
        s += std::to_string(r.m2);
        s += ',';
        s += oc.delta_u ? full(*oc.delta_u) : std::string("nan");
        s += '\n';
    }
    return s;
}

std::vector<SweepOutcome> parse_sweep_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "N,h,tau,t0,T,x0,X,m1,m2,delta_u")
        throw argument_error("unrecognized sweep CSV header");
    std::vector<SweepOutcome> outcomes;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        if (fields.size() != 10)
            throw argument_error("sweep CSV row has " + std::to_string(fields.size()) +
                                 " fields, expected 10");
        SweepOutcome oc;
        oc.row.label = fields[0];
        oc.row.h = parse_double(fields[1], "h");
        oc.row.tau = parse_double(fields[2], "tau");
        oc.row.t0 = parse_double(fields[3], "t0");
        oc.row.T = parse_double(fields[4], "T");
        oc.row.x0 = parse_double(fields[5], "x0");
        oc.row.X = parse_double(fields[6], "X");
        oc.row.m1 = parse_int(fields[7], "m1");
        oc.row.m2 = parse_int(fields[8], "m2");
        double d = parse_double(fields[9], "delta_u");
        if (!std::isnan(d)) oc.delta_u = d;
        outcomes.push_back(std::move(oc));
    }
    return outcomes;
}

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.format != "text" && opt.format != "json")
            throw argument_error("solve format must be text or json");
        check_degree(opt.m1, "m1");
        check_degree(opt.m2, "m2");
        PdaeProblem pr = problem_by_name(opt.example);
        GridSpec grid = GridSpec::make(opt.x0, opt.X, opt.t0, opt.T, opt.h, opt.tau);
        auto [sol, report] = solver::march(pr, grid, opt.m1, opt.m2);
        (void)sol;
        if (opt.format == "json") {
            ordered_json j;
            j["example"] = opt.example;
            j["h"] = opt.h;
            j["tau"] = opt.tau;
            j["m1"] = opt.m1;
            j["m2"] = opt.m2;
            j["x0"] = opt.x0;
            j["X"] = opt.X;
            j["t0"] = opt.t0;
            j["T"] = opt.T;
            j["n1"] = grid.n1;
            j["n2"] = grid.n2;
            set_optional(j, "delta_u", report.delta_u);
            j["max_solution_norm"] = report.max_solution_norm;
            j["cells_solved"] = report.cells_solved;
            j["wall_time_sec"] = report.wall_time_sec;
            j["warnings"] = report.warnings;
            out << j.dump(2) << "\n";
        } else {
            out << "example            " << opt.example << "\n";
            out << "grid               h=" << full(opt.h) << " tau=" << full(opt.tau)
                << " n1=" << grid.n1 << " n2=" << grid.n2 << "\n";
            out << "cell degrees       m1=" << opt.m1 << " m2=" << opt.m2 << "\n";
            out << "cells solved       " << report.cells_solved << "\n";
            out << "max solution norm  " << full(report.max_solution_norm) << "\n";
            out << "delta_u            "
                << (report.delta_u ? sci3(*report.delta_u) : std::string("n/a")) << "\n";
            out << "wall time (s)      " << report.wall_time_sec << "\n";
            for (const auto& w : report.warnings) out << "warning: " << w << "\n";
        }
        return kExitOk;
    } catch (const argument_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const unsupported_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const numerical_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const singular_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int run_sweep(const std::string& config_path, const std::string& format_override,
              std::ostream& out, std::ostream& err) {
    SweepConfig cfg;
    try {
        std::ifstream file(config_path);
        if (!file) throw argument_error("cannot open sweep config '" + config_path + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        cfg = parse_sweep_config(buffer.str());
        if (!format_override.empty()) {
            if (!known_format(format_override))
                throw argument_error("sweep format must be table, csv, or json");
            cfg.format = format_override;
        }
    } catch (const argument_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<SweepOutcome> outcomes = run_sweep_rows(cfg);
    if (cfg.format == "csv")
        out << format_sweep_csv(outcomes);
    else if (cfg.format == "json")
        out << sweep_json(outcomes).dump(2) << "\n";
    else
        write_table(outcomes, out);

    int rc = kExitOk;
    for (const auto& oc : outcomes) {
        if (!oc.error.empty()) {
            err << "row " << oc.row.label << ": " << oc.error << "\n";
            rc = kExitNumerical;
        }
    }
    if (rc == kExitOk) {
        for (const auto& oc : outcomes) {
            if (!oc.row.expected || !oc.delta_u) continue;
            double lo = *oc.row.expected / cfg.tolerance_factor;
            double hi = *oc.row.expected * cfg.tolerance_factor;
            if (!(*oc.delta_u >= lo && *oc.delta_u <= hi)) {
                err << "row " << oc.row.label << ": delta_u " << full(*oc.delta_u)
                    << " outside [" << full(lo) << ", " << full(hi) << "]\n";
                rc = kExitVerification;
            }
        }
    }
    return rc;
}

int run_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        check_degree(opt.m1, "m1");
        check_degree(opt.m2, "m2");
        if (opt.samples < 1) throw argument_error("sample count must be positive");
        if (!(opt.h > 0.0) || !(opt.tau > 0.0)) throw argument_error("steps must be positive");
        if (!(opt.X > opt.x0) || !(opt.T > opt.t0))
            throw argument_error("domain must satisfy x0 < X and t0 < T");
        PdaeProblem pr = problem_by_name(opt.example);
        double r = opt.tau / opt.h;
        pencil::PencilReport rep =
            pencil::analyze(pr, opt.x0, opt.X, opt.t0, opt.T, r, opt.m1, opt.m2, opt.samples);

        ordered_json j;
        j["samples"] = ordered_json::array();
        for (const auto& s : rep.samples) {
            ordered_json js;
            js["x"] = s.x;
            js["t"] = s.t;
            js["rank_a"] = s.rank_a;
            js["rank_b"] = s.rank_b;
            js["degree"] = s.degree;
            js["roots"] = ordered_json::array();
            for (const auto& root : s.roots) {
                ordered_json jr;
                jr["re"] = root.value.real();
                jr["im"] = root.value.imag();
                jr["mult"] = root.multiplicity;
                js["roots"].push_back(std::move(jr));
            }
            j["samples"].push_back(std::move(js));
        }
        j["rank_degree_b"] = rep.rank_degree_b;
        j["rank_degree_a"] = rep.rank_degree_a;
        j["multiplicity_constant"] = rep.multiplicity_constant;
        set_optional(j, "lemma2_min_separation", rep.min_separation);
        set_optional(j, "mu", rep.mu);
        set_optional(j, "xi_j_min", rep.xi_j_min);
        set_optional(j, "canonical_residual", rep.canonical_residual);
        out << j.dump(2) << "\n";
        return kExitOk;
    } catch (const argument_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const unsupported_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const numerical_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const singular_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.m_max < 1 || opt.m_max > 10)
            throw argument_error("m_max must lie in 1..10, got " + std::to_string(opt.m_max));
        std::vector<theory::SuiteCheck> checks = theory::run_suite(opt.m_max);
        int failed = 0;
        for (const auto& c : checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
            if (!c.pass) ++failed;
        }
        out << checks.size() << " checks, " << failed << " failed\n";
        return failed == 0 ? kExitOk : kExitVerification;
    } catch (const argument_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const numerical_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace pdae::cli
