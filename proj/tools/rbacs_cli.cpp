// Command-line front end: solve single instances, run multi-trial benchmarks,
// and inspect TSPLIB files.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rbacs/bench.hpp"

namespace {

struct SolverFlags {
    std::string algo = "rbacs";
    std::uint64_t seed = 1;
    int budget = 2000;
    int stagnation = 0;
    int ants = 20;
    double q0 = 0.9;
    double beta = 2.0;
    double rho_black = 0.10;
    double rho_red = 0.20;
    double alpha_black = 0.10;
    double alpha_red = 0.15;
    double c_init = 100.0;
    std::string decay_scope = "all_edges";
    bool serial = false;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
    cmd->add_option("--algo", f.algo, "Algorithm: acs or rbacs")
        ->check(CLI::IsMember({"acs", "rbacs"}))
        ->capture_default_str();
    cmd->add_option("--seed", f.seed, "Base random seed")->capture_default_str();
    cmd->add_option("--budget", f.budget, "Iteration cap per run")->capture_default_str();
    cmd->add_option("--stagnation", f.stagnation, "Early stop after this many non-improving iterations (0 = off)")
        ->capture_default_str();
    cmd->add_option("--ants", f.ants, "Ants per group")->capture_default_str();
    cmd->add_option("--q0", f.q0, "Exploitation threshold")->capture_default_str();
    cmd->add_option("--beta", f.beta, "Visibility exponent")->capture_default_str();
    cmd->add_option("--rho-black", f.rho_black, "Black group local decay")->capture_default_str();
    cmd->add_option("--rho-red", f.rho_red, "Red group local decay")->capture_default_str();
    cmd->add_option("--alpha-black", f.alpha_black, "Black group global decay")->capture_default_str();
    cmd->add_option("--alpha-red", f.alpha_red, "Red group global decay")->capture_default_str();
    cmd->add_option("--c-init", f.c_init, "Inverse-cost initialization constant")->capture_default_str();
    cmd->add_option("--decay-scope", f.decay_scope, "Global update scope: all_edges or best_tour_only")
        ->check(CLI::IsMember({"all_edges", "best_tour_only"}))
        ->capture_default_str();
    cmd->add_flag("--serial", f.serial, "Disable OpenMP execution");
}

rbacs::RbacsConfig to_config(const SolverFlags& f) {
    rbacs::RbacsConfig cfg;
    cfg.black = {f.q0, f.beta, f.rho_black, f.alpha_black, f.ants};
    cfg.red = {f.q0, f.beta, f.rho_red, f.alpha_red, f.ants};
    cfg.c_init = f.c_init;
    cfg.budget = f.budget;
    cfg.stagnation_limit = f.stagnation;
    cfg.decay_scope =
        f.decay_scope == "all_edges" ? rbacs::DecayScope::all_edges : rbacs::DecayScope::best_tour_only;
    cfg.exec = f.serial ? rbacs::Exec::serial : rbacs::Exec::openmp;
    cfg.validate();
    return cfg;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string params_line(const SolverFlags& f) {
    std::string line = "budget=" + std::to_string(f.budget) + " stagnation=" + std::to_string(f.stagnation) +
                       " ants=" + std::to_string(f.ants) + " q0=" + fmt(f.q0) + " beta=" + fmt(f.beta);
    if (f.algo == "acs") {
        line += " rho=" + fmt(f.rho_black) + " alpha=" + fmt(f.alpha_black);
    } else {
        line += " c_init=" + fmt(f.c_init) + " rho_black=" + fmt(f.rho_black) +
                " alpha_black=" + fmt(f.alpha_black) + " rho_red=" + fmt(f.rho_red) +
                " alpha_red=" + fmt(f.alpha_red);
    }
    line += " decay_scope=" + f.decay_scope;
    return line;
}

rbacs::TspInstance load_instance(const std::string& path, bool serial) {
    return rbacs::TspInstance::from_tsplib(rbacs::load_tsplib_file(path),
                                           serial ? rbacs::Exec::serial : rbacs::Exec::openmp);
}

rbacs::SolveResult dispatch(const rbacs::TspInstance& inst, const SolverFlags& f,
                            const rbacs::RbacsConfig& cfg) {
    if (f.algo == "acs") {
        rbacs::AcsOptions options;
        options.init = rbacs::PheromoneInit::uniform;
        options.c_init = cfg.c_init;
        options.decay_scope = cfg.decay_scope;
        options.stagnation_limit = cfg.stagnation_limit;
        options.exec = cfg.exec;
        return rbacs::run_acs(inst, cfg.black, cfg.budget, f.seed, options);
    }
    return rbacs::run_rbacs(inst, cfg, f.seed);
}

int cmd_solve(const std::string& path, const SolverFlags& f, const std::string& trace_path) {
    const rbacs::TspInstance inst = load_instance(path, f.serial);
    const rbacs::RbacsConfig cfg = to_config(f);
    const rbacs::SolveResult result = dispatch(inst, f, cfg);

    const rbacs::TourValidity verdict = rbacs::validate_tour(result.best.order, inst.n());
    if (!verdict.valid) {
        std::cerr << "error: solver produced an invalid tour: " << verdict.defect << '\n';
        return 1;
    }

    std::cout << "instance=" << inst.name() << " n=" << inst.n() << " algo=" << f.algo
              << " seed=" << f.seed << ' ' << params_line(f) << '\n';
    std::cout << "best_length=" << result.best.length << '\n';
    std::cout << "iterations=" << result.iterations_run << '\n';
    std::cout << "tour=";
    for (std::size_t i = 0; i < result.best.order.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << result.best.order[i] + 1;  // 1-based TSPLIB ids
    }
    std::cout << '\n';

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out.is_open()) {
            std::cerr << "error: cannot open trace file " << trace_path << '\n';
            return 1;
        }
        rbacs::emit_trace_csv(result.trace, out);
    }
    return 0;
}

int cmd_bench(const std::string& path, const SolverFlags& f, int trials, const std::string& trace_dir,
              std::int64_t optimum) {
    const rbacs::TspInstance inst = load_instance(path, f.serial);
    const rbacs::RbacsConfig cfg = to_config(f);

    std::vector<rbacs::ConvergenceTrace> traces;
    const rbacs::Algorithm algo = f.algo == "acs" ? rbacs::Algorithm::acs : rbacs::Algorithm::rbacs;
    const std::vector<rbacs::TrialResult> results =
        rbacs::run_trials(inst, algo, cfg, trials, f.seed, trace_dir.empty() ? nullptr : &traces);

    for (const rbacs::TrialResult& trial : results) {
        const rbacs::TourValidity verdict = rbacs::validate_tour(trial.best_tour.order, inst.n());
        if (!verdict.valid) {
            std::cerr << "error: invalid tour in trial with seed " << trial.seed << ": " << verdict.defect
                      << '\n';
            return 1;
        }
    }

    const rbacs::SummaryStats stats = rbacs::summarize(results);
    const std::int64_t reference = optimum > 0 ? optimum : stats.min;

    std::cout << "bench instance=" << inst.name() << " n=" << inst.n() << " algo=" << f.algo
              << " trials=" << trials << " base_seed=" << f.seed << ' ' << params_line(f) << '\n';
    std::cout << rbacs::compare_table({{f.algo, stats}}, reference);
    char buf[200];
    std::snprintf(buf, sizeof(buf), "result algo=%s trials=%d mean=%.3f min=%" PRId64 " max=%" PRId64
                  " stddev=%.3f optimum=%" PRId64 "\n",
                  f.algo.c_str(), stats.trials, stats.mean, stats.min, stats.max, stats.stddev, reference);
    std::cout << buf;

    if (!trace_dir.empty()) {
        std::filesystem::create_directories(trace_dir);
        for (std::size_t t = 0; t < traces.size(); ++t) {
            char name[32];
            std::snprintf(name, sizeof(name), "trial_%03zu.csv", t);
            const std::filesystem::path file = std::filesystem::path(trace_dir) / name;
            std::ofstream out(file);
            if (!out.is_open()) {
                std::cerr << "error: cannot open trace file " << file << '\n';
                return 1;
            }
            rbacs::emit_trace_csv(traces[t], out);
        }
        std::cerr << "wrote " << traces.size() << " trace files to " << trace_dir << '\n';
    }
    return 0;
}

int cmd_inspect(const std::string& path) {
    const rbacs::ParsedInstance parsed = rbacs::load_tsplib_file(path);
    const rbacs::TspInstance inst = rbacs::TspInstance::from_tsplib(parsed);
    const rbacs::Tour nn = rbacs::nearest_neighbor_tour(inst, 0);
    const double tau0 = 1.0 / (static_cast<double>(inst.n()) * static_cast<double>(nn.length));

    std::cout << "name=" << parsed.header.name << '\n';
    std::cout << "dimension=" << parsed.header.dimension << '\n';
    std::cout << "edge_weight_type=EUC_2D\n";
    std::cout << "nn_tour_length=" << nn.length << '\n';
    char buf[48];
    std::snprintf(buf, sizeof(buf), "tau0=%.12g\n", tau0);
    std::cout << buf;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ant Colony System / Red-Black ACS solver for TSPLIB instances"};
    app.require_subcommand(1);

    SolverFlags solve_flags;
    std::string solve_path;
    std::string solve_trace;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance and print the best tour");
    solve->add_option("instance", solve_path, "TSPLIB instance file")->required();
    add_solver_flags(solve, solve_flags);
    solve->add_option("--trace", solve_trace, "Write the convergence trace CSV here");

    SolverFlags bench_flags;
    std::string bench_path;
    std::string bench_trace_dir;
    int bench_trials = 30;
    std::int64_t bench_optimum = 0;
    CLI::App* bench = app.add_subcommand("bench", "Run repeated independent trials and summarize");
    bench->add_option("instance", bench_path, "TSPLIB instance file")->required();
    add_solver_flags(bench, bench_flags);
    bench->add_option("--trials", bench_trials, "Number of independent trials")->capture_default_str();
    bench->add_option("--trace-dir", bench_trace_dir, "Write per-trial trace CSVs into this directory");
    bench->add_option("--optimum", bench_optimum, "Reference optimum for the excess column");

    std::string inspect_path;
    CLI::App* inspect = app.add_subcommand("inspect", "Print instance facts");
    inspect->add_option("instance", inspect_path, "TSPLIB instance file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_path, solve_flags, solve_trace);
        if (bench->parsed()) return cmd_bench(bench_path, bench_flags, bench_trials, bench_trace_dir, bench_optimum);
        if (inspect->parsed()) return cmd_inspect(inspect_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
