// Command-line front end: solve, reduce, verify and convergence runs over
// JSON problem files, emitting CSV grids and JSON reports.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "charode/reducers.hpp"
#include "charode/spec_io.hpp"
#include "charode/verify.hpp"

namespace {

using namespace charode;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSolverFailure = 2;
constexpr int kExitInconsistent = 3;

struct CommonArgs {
    std::string spec_path;
    std::string out_path;
    int threads = 1;
    double tol_override = 0.0;
    std::string oracle_name;
};

ProblemSpec load(const CommonArgs& args) {
    ProblemSpec spec = io::load_spec_file(args.spec_path);
    if (args.tol_override > 0.0) spec.solver.tol = args.tol_override;
    return spec;
}

std::string default_out(const std::string& spec_path) {
    std::filesystem::path p(spec_path);
    p.replace_extension(".csv");
    return p.filename().string();
}

std::string report_path_for(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".report.json");
    return p.string();
}

int cmd_solve(const CommonArgs& args) {
    ProblemSpec spec = load(args);
    RunOptions run{args.threads};

    const auto t0 = std::chrono::steady_clock::now();
    ReducedODE red;
    const bool second = is_second_order(spec.family);
    SolutionGrid grid;
    if (second) {
        red = reduce(spec);
        grid = (red.direction == ReduceDirection::InT) ? integrate_reduced_in_t(red, spec, run)
                                                       : integrate_reduced_in_x(red, spec, run);
    } else {
        grid = solve(spec, run);
    }
    const auto t1 = std::chrono::steady_clock::now();

    auto res = verify::residual(grid, spec);

    const std::string out = args.out_path.empty() ? default_out(args.spec_path) : args.out_path;
    {
        std::ofstream os(out, std::ios::binary);
        if (!os) {
            std::cerr << "error: cannot write " << out << "\n";
            return kExitValidation;
        }
        io::write_csv(grid, os);
    }
    {
        std::ofstream os(report_path_for(out), std::ios::binary);
        os << io::make_report(spec, grid, second ? &red : nullptr, &res).dump(2) << "\n";
    }

    const long total = static_cast<long>(grid.u.size());
    const long failed = total - grid.count(NodeStatus::Ok);
    const double wall =
        std::chrono::duration_cast<std::chrono::duration<double>>(t1 - t0).count();
    std::cerr << "solved " << family_name(spec.family) << ": " << grid.count(NodeStatus::Ok)
              << "/" << total << " nodes ok, max residual " << res.max_abs << ", " << wall
              << " s\n";
    std::cout << "wrote " << out << " and " << report_path_for(out) << "\n";

    if (static_cast<double>(failed) > spec.solver.max_failure_fraction * total)
        return kExitSolverFailure;
    return kExitOk;
}

int cmd_reduce(const CommonArgs& args) {
    ProblemSpec spec = load(args);
    if (!is_second_order(spec.family)) {
        std::cerr << "error: family '" << family_name(spec.family)
                  << "' is first order; nothing to reduce\n";
        return kExitValidation;
    }
    ReducedODE red = reduce(spec);
    std::printf("family       %s\n", family_name(spec.family));
    std::printf("direction    %s\n", red.direction == ReduceDirection::InT ? "t" : "x");
    std::printf("C            %.12e\n", red.c);
    std::printf("delta_C      %.3e (threshold %.3e)\n", red.delta_c, red.consistency_threshold);
    std::printf("consistent   %s\n", red.consistent ? "yes" : "no");
    std::printf("K samples:\n");
    for (int i = 0; i <= 8; ++i) {
        const double u = -2.0 + 4.0 * i / 8.0;
        try {
            std::printf("  K(%+.3f) = %.9e\n", u, red.k_of_u(u));
        } catch (const std::runtime_error&) {
            std::printf("  K(%+.3f) = (outside domain)\n", u);
        }
    }
    std::printf("Hhat samples:\n");
    for (int j = 0; j <= 2; ++j) {
        const double t = spec.domain.t_max * j / 2.0;
        for (int i = 0; i <= 2; ++i) {
            const double x =
                spec.domain.x_min + (spec.domain.x_max - spec.domain.x_min) * i / 2.0;
            std::printf("  Hhat(%.4f, %.4f) = %.9e\n", x, t, red.h_hat(x, t));
        }
    }
    if (!red.consistent) {
        std::printf("per-node constants (ansatz inconsistency report):\n");
        for (const auto& [coord, ci] : red.c_table)
            std::printf("  C(%.6f) = %.12e\n", coord, ci);
        return kExitInconsistent;
    }
    return kExitOk;
}

int cmd_verify(const CommonArgs& args) {
    ProblemSpec spec = load(args);
    std::optional<verify::OracleId> id;
    if (!args.oracle_name.empty()) {
        id = verify::oracle_from_name(args.oracle_name);
        if (!id) {
            std::cerr << "error: unknown oracle '" << args.oracle_name << "'\n";
            return kExitValidation;
        }
        std::string why;
        if (!verify::oracle_matches(*id, spec, &why)) {
            std::cerr << "error: spec does not match oracle '" << args.oracle_name
                      << "': field '" << why << "' differs\n";
            return kExitValidation;
        }
    } else {
        id = verify::match_oracle(spec);
        if (!id) {
            std::cerr << "error: no oracle matches this spec; pass --oracle explicitly\n";
            return kExitValidation;
        }
    }

    SolutionGrid grid = solve(spec, RunOptions{args.threads});
    auto cmp = verify::compare_with_oracle(grid, *id);
    auto res = verify::residual(grid, spec);

    const double err_bound = 1e-6;
    const bool pass = cmp.n_compared > 0 && cmp.max_err <= err_bound;
    std::printf("oracle       %s\n", verify::oracle_name(*id));
    std::printf("compared     %ld nodes (%ld skipped)\n", cmp.n_compared, cmp.n_skipped);
    std::printf("max |err|    %.3e  (bound %.1e)  %s\n", cmp.max_err, err_bound,
                pass ? "PASS" : "FAIL");
    std::printf("residual     max %.3e  mean %.3e  over %ld interior nodes\n", res.max_abs,
                res.mean_abs, res.n_interior);
    return pass ? kExitOk : kExitSolverFailure;
}

int cmd_convergence(const CommonArgs& args) {
    ProblemSpec spec = load(args);
    auto id = args.oracle_name.empty() ? verify::match_oracle(spec)
                                       : verify::oracle_from_name(args.oracle_name);
    if (!id) {
        std::cerr << "error: no oracle available for a convergence study\n";
        return kExitValidation;
    }
    const double hs[3] = {4e-2, 2e-2, 1e-2};
    auto pts = verify::convergence_order(*id, hs);
    for (const auto& p : pts) std::printf("h = %.4f   max residual = %.6e\n", p.h, p.value);
    const double slope = verify::fitted_slope(pts);
    const bool pass = slope >= 1.7 && slope <= 2.3;
    std::printf("slope        %.3f  (expected within [1.7, 2.3])  %s\n", slope,
                pass ? "PASS" : "FAIL");
    return pass ? kExitOk : kExitSolverFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic-reduction PDE solver"};
    app.require_subcommand(1);

    CommonArgs args;

    auto add_common = [&](CLI::App* sub, bool with_out) {
        sub->add_option("spec", args.spec_path, "problem spec (JSON)")->required();
        sub->add_option("--threads", args.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--tol", args.tol_override, "override solver tolerance");
        if (with_out) sub->add_option("-o,--out", args.out_path, "output CSV path");
    };

    auto* solve_cmd = app.add_subcommand("solve", "solve to a CSV grid plus JSON report");
    add_common(solve_cmd, true);
    auto* reduce_cmd = app.add_subcommand("reduce", "print the reduced-ODE summary");
    add_common(reduce_cmd, false);
    auto* verify_cmd = app.add_subcommand("verify", "solve and compare against a closed form");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--oracle", args.oracle_name, "oracle id (eq4, eq7, ...)");
    auto* conv_cmd = app.add_subcommand("convergence", "finite-difference order study");
    add_common(conv_cmd, false);
    conv_cmd->add_option("--oracle", args.oracle_name, "oracle id (eq4, eq7, ...)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return cmd_solve(args);
        if (reduce_cmd->parsed()) return cmd_reduce(args);
        if (verify_cmd->parsed()) return cmd_verify(args);
        if (conv_cmd->parsed()) return cmd_convergence(args);
    } catch (const charode::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolverFailure;
    }
    return kExitValidation;
}
