#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "sad/bench.hpp"
#include "sad/dae.hpp"
#include "sad/errors.hpp"
#include "sad/log.hpp"
#include "sad/matrix_io.hpp"
#include "sad/models/registry.hpp"
#include "sad/newton.hpp"
#include "sad/num_format.hpp"
#include "sad/signal_stats.hpp"
#include "sad/sparsity.hpp"

namespace {

struct CliOptions {
    std::string model;
    std::vector<int> N;
    double h = 1e-3;
    double t_end = 0.1;
    unsigned seed = 42;
    bool swap_roles = false;
    std::string out;
    int reps = 31;
    std::string config;
};

struct OutTarget {
    bool matrix_market = false;
    std::string path;  // empty means stdout
};

OutTarget parse_out(const std::string& out) {
    OutTarget target;
    if (out.rfind("mm:", 0) == 0) {
        target.matrix_market = true;
        target.path = out.substr(3);
        if (target.path.empty()) throw sad::UsageError("mm: output needs a file path");
    } else {
        target.path = out;
    }
    return target;
}

void write_text(const OutTarget& target, const std::string& text) {
    if (target.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(target.path);
    if (!file) throw sad::UsageError("cannot open output file: " + target.path);
    file << text;
}

int single_N(const CliOptions& opts) {
    if (opts.N.size() > 1) throw sad::UsageError("this command takes a single -N value");
    return opts.N.empty() ? 1 : opts.N.front();
}

sad::ModelHandle build_model(const CliOptions& opts) {
    sad::ModelOptions options;
    options.N = single_N(opts);
    options.swap_roles = opts.swap_roles;
    if (!opts.config.empty()) options.overrides = sad::parse_config_file(opts.config);
    return sad::make_model(opts.model, options);
}

// System matrix dumped by pattern/jacobian: the algebraic Jacobian for plain
// models, the combined implicit-Euler step Jacobian for differential ones.
sad::CsrMatrix build_system(const CliOptions& opts) {
    if (!(opts.h > 0.0)) throw sad::UsageError("step size --h must be positive");
    sad::ModelHandle handle = build_model(opts);
    if (handle.is_dae()) {
        const std::vector<double> v0 = handle.dae->initial_state();
        return sad::assemble_dae_csr(*handle.dae, v0, v0, 0.0, 1.0 / opts.h);
    }
    const std::vector<double> x0 = handle.algebraic->initial_state();
    std::vector<sad::ADScalar> vars = sad::make_variables(x0);
    std::vector<sad::ADScalar> res(handle.algebraic->dimension(), sad::ADScalar(0.0));
    handle.algebraic->residual(std::span<const sad::ADScalar>(vars),
                               std::span<sad::ADScalar>(res));
    return sad::assemble_csr(std::span<const sad::ADScalar>(res), handle.algebraic->dimension());
}

int cmd_pattern(const CliOptions& opts) {
    const sad::CsrMatrix system = build_system(opts);
    const sad::SparsityPattern pattern = sad::pattern_of(system);
    const OutTarget target = parse_out(opts.out);
    if (target.matrix_market) {
        std::ofstream file(target.path);
        if (!file) throw sad::UsageError("cannot open output file: " + target.path);
        sad::write_matrix_market(file, pattern);
        return 0;
    }
    write_text(target, sad::print_matlab(pattern) + "\n");
    return 0;
}

int cmd_jacobian(const CliOptions& opts) {
    const sad::CsrMatrix system = build_system(opts);
    const OutTarget target = parse_out(opts.out);
    if (target.matrix_market) {
        std::ofstream file(target.path);
        if (!file) throw sad::UsageError("cannot open output file: " + target.path);
        sad::write_matrix_market(file, system);
        return 0;
    }
    write_text(target, sad::print_matlab(system) + "\n");
    return 0;
}

int cmd_solve(const CliOptions& opts) {
    const OutTarget target = parse_out(opts.out);
    if (target.matrix_market)
        throw sad::UsageError("mm: output applies to pattern and jacobian only");

    sad::ModelHandle handle = build_model(opts);
    std::vector<double> solution;
    std::vector<std::string> names;
    if (handle.is_dae()) {
        solution = sad::consistent_init(*handle.dae);
        names = handle.dae->state_names();
    } else {
        sad::NewtonStats stats;
        solution = sad::newton_solve(*handle.algebraic, handle.algebraic->initial_state(),
                                     sad::NewtonConfig{1e-10, 50, 1.0}, &stats);
        names = handle.algebraic->unknown_names();
        sad::log_info("newton_solve converged in " + std::to_string(stats.iterations) +
                      " iterations");
    }

    std::string text;
    for (std::size_t i = 0; i < solution.size(); ++i)
        text += names[i] + " = " + sad::format_double(solution[i]) + "\n";
    write_text(target, text);
    return 0;
}

int cmd_simulate(const CliOptions& opts) {
    const OutTarget target = parse_out(opts.out);
    if (target.matrix_market)
        throw sad::UsageError("mm: output applies to pattern and jacobian only");
    if (!(opts.h > 0.0)) throw sad::UsageError("step size --h must be positive");
    if (opts.t_end < 0.0) throw sad::UsageError("--t-end must be non-negative");

    sad::ModelHandle handle = build_model(opts);
    if (!handle.is_dae())
        throw sad::UsageError("simulate requires a differential model (microgrid or decay)");
    const sad::DaeModel& dae = *handle.dae;

    const std::vector<double> v0 =
        dae.requires_consistent_init() ? sad::consistent_init(dae) : dae.initial_state();
    const sad::DaeConfig config(opts.h, opts.t_end);
    const sad::Trajectory trajectory = sad::dae_integrate(dae, v0, config);

    std::ostringstream csv;
    sad::write_trajectory_csv(csv, dae, trajectory);
    write_text(target, csv.str());

    // Summary of the first output signal over the settled half of the run.
    std::vector<double> times, signal;
    const double window_start = 0.5 * opts.t_end;
    for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
        if (trajectory.times[k] < window_start) continue;
        times.push_back(trajectory.times[k]);
        signal.push_back(dae.outputs(trajectory.states[k], trajectory.times[k]).front());
    }
    if (times.size() < 2) {
        times.clear();
        signal.clear();
        for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
            times.push_back(trajectory.times[k]);
            signal.push_back(dae.outputs(trajectory.states[k], trajectory.times[k]).front());
        }
    }
    const sad::SignalStats stats = sad::measure_signal(times, signal);
    std::cerr << "summary: signal=" << dae.output_names().front()
              << " amplitude=" << sad::format_double(stats.amplitude)
              << " frequency=" << sad::format_double(stats.frequency)
              << " crossings=" << stats.crossings << "\n";
    return 0;
}

sad::MicrogridParams bench_params(const CliOptions& opts) {
    if (opts.model != "microgrid")
        throw sad::UsageError("bench commands support the microgrid model only");
    if (opts.swap_roles)
        throw sad::UsageError("--swap-roles is only available for the lorenz model");
    sad::MicrogridParams params;
    if (!opts.config.empty()) sad::apply_overrides(params, sad::parse_config_file(opts.config));
    return params;
}

void warn_reps(int reps) {
    if (reps < 1) throw sad::UsageError("--reps must be at least 1");
    if (reps < 30)
        std::cerr << "warning: fewer than 30 repetitions gives noisy timings\n";
}

void write_gnuplot_script(const std::string& csv_path) {
    std::ofstream script(csv_path + ".gp");
    if (!script) return;
    script << "set datafile separator ','\n"
           << "set xlabel 'dimension'\n"
           << "set ylabel 'per-call time [us]'\n"
           << "set key autotitle columnhead\n"
           << "plot '" << csv_path << "' using 3:7 with linespoints\n";
}

int cmd_bench_scaling(const CliOptions& opts) {
    const OutTarget target = parse_out(opts.out);
    if (target.matrix_market)
        throw sad::UsageError("mm: output applies to pattern and jacobian only");
    const sad::MicrogridParams params = bench_params(opts);
    warn_reps(opts.reps);

    const std::vector<int> Ns =
        opts.N.empty() ? std::vector<int>{100, 200, 300, 400, 500, 600} : opts.N;
    if (Ns.empty()) throw sad::UsageError("-N list must be nonempty");

    std::string csv = std::string(sad::bench_csv_header) + "\n";
    std::vector<double> dims, per_call;
    for (int n : Ns) {
        const sad::BenchRecord record =
            sad::bench_microgrid_sparse(params, n, opts.reps, opts.seed);
        csv += sad::bench_csv_row(record) + "\n";
        dims.push_back(record.dim);
        per_call.push_back(record.per_call_us);
        sad::log_info("bench N=" + std::to_string(n) + " per_call_us=" +
                      sad::format_double(record.per_call_us));
    }
    write_text(target, csv);
    if (!target.path.empty()) write_gnuplot_script(target.path);

    if (dims.size() >= 2) {
        const sad::LinearFit fit = sad::fit_linear(dims, per_call);
        std::cerr << "fit: per_call_us = " << sad::format_double(fit.slope) << " * dim + "
                  << sad::format_double(fit.intercept)
                  << " (R2 = " << sad::format_double(fit.r2) << ")\n";
    } else {
        std::cerr << "fit skipped: need at least two N values\n";
    }
    return 0;
}

int cmd_bench_dense(const CliOptions& opts) {
    const OutTarget target = parse_out(opts.out);
    if (target.matrix_market)
        throw sad::UsageError("mm: output applies to pattern and jacobian only");
    const sad::MicrogridParams params = bench_params(opts);
    warn_reps(opts.reps);

    const std::vector<int> Ns = opts.N.empty() ? std::vector<int>{50, 100, 200} : opts.N;
    if (Ns.empty()) throw sad::UsageError("-N list must be nonempty");

    std::string csv = std::string(sad::bench_csv_header) + "\n";
    std::vector<std::pair<int, double>> ratios;
    for (int n : Ns) {
        const sad::BenchRecord sparse =
            sad::bench_microgrid_sparse(params, n, opts.reps, opts.seed);
        const sad::BenchRecord dense = sad::bench_microgrid_dense(params, n, opts.reps, opts.seed);
        csv += sad::bench_csv_row(sparse) + "\n";
        csv += sad::bench_csv_row(dense) + "\n";
        ratios.emplace_back(n, dense.per_call_us / sparse.per_call_us);
    }
    write_text(target, csv);
    if (!target.path.empty()) write_gnuplot_script(target.path);
    for (const auto& [n, ratio] : ratios)
        std::cerr << "ratio N=" << n << ": dense/sparse = " << sad::format_double(ratio) << "\n";
    return 0;
}

void add_common_options(CLI::App* sub, CliOptions& opts, const std::string& default_model) {
    // The step-size option uses the short spelling --h, so the help flag must
    // give up its single-letter form.
    sub->set_help_flag("--help", "print this help message and exit");
    opts.model = default_model;
    sub->add_option("--model", opts.model, "model name (lorenz, microgrid, decay)");
    sub->add_option("-N", opts.N, "microgrid load count (repeatable for bench commands)");
    sub->add_option("--h", opts.h, "integration step size in seconds");
    sub->add_option("--t-end", opts.t_end, "simulation end time in seconds");
    sub->add_option("--seed", opts.seed, "random seed");
    sub->add_flag("--swap-roles", opts.swap_roles, "make the parameters the unknowns (lorenz)");
    sub->add_option("--out", opts.out, "output file; prefix with mm: for MatrixMarket");
    sub->add_option("--reps", opts.reps, "benchmark repetitions");
    sub->add_option("--config", opts.config, "key=value file overriding microgrid parameters");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse forward-mode differentiation workbench"};
    app.require_subcommand(1);

    CliOptions pattern_opts, jacobian_opts, solve_opts, simulate_opts, scaling_opts, dense_opts;
    CLI::App* pattern = app.add_subcommand("pattern", "print the structural incidence matrix");
    add_common_options(pattern, pattern_opts, "lorenz");
    CLI::App* jacobian = app.add_subcommand("jacobian", "print the assembled Jacobian");
    add_common_options(jacobian, jacobian_opts, "lorenz");
    CLI::App* solve = app.add_subcommand("solve", "run the Newton solver");
    add_common_options(solve, solve_opts, "lorenz");
    CLI::App* simulate = app.add_subcommand("simulate", "integrate a differential model");
    add_common_options(simulate, simulate_opts, "microgrid");
    CLI::App* scaling = app.add_subcommand("bench-scaling", "time Jacobian evaluation vs size");
    add_common_options(scaling, scaling_opts, "microgrid");
    CLI::App* dense = app.add_subcommand("bench-dense", "compare sparse and dense modes");
    add_common_options(dense, dense_opts, "microgrid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (pattern->parsed()) return cmd_pattern(pattern_opts);
        if (jacobian->parsed()) return cmd_jacobian(jacobian_opts);
        if (solve->parsed()) return cmd_solve(solve_opts);
        if (simulate->parsed()) return cmd_simulate(simulate_opts);
        if (scaling->parsed()) return cmd_bench_scaling(scaling_opts);
        if (dense->parsed()) return cmd_bench_dense(dense_opts);
        return 2;
    } catch (const sad::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
