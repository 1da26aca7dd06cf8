#include "rbacs/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rbacs {

std::uint64_t trial_seed(std::uint64_t base_seed, int index) {
    return hash64(base_seed, static_cast<std::uint64_t>(index));
}

namespace {

TrialResult run_one(const TspInstance& inst, Algorithm algo, const RbacsConfig& config,
                    std::uint64_t seed, ConvergenceTrace* trace_out) {
    const auto begin = std::chrono::steady_clock::now();
    SolveResult solved;
    if (algo == Algorithm::acs) {
        AcsOptions options;
        options.init = PheromoneInit::uniform;
        options.c_init = config.c_init;
        options.decay_scope = config.decay_scope;
        options.stagnation_limit = config.stagnation_limit;
        options.exec = config.exec;
        solved = run_acs(inst, config.black, config.budget, seed, options);
    } else {
        solved = run_rbacs(inst, config, seed);
    }
    const auto end = std::chrono::steady_clock::now();

    TrialResult trial;
    trial.seed = seed;
    trial.best_length = solved.best.length;
    trial.iterations_run = solved.iterations_run;
    trial.wall_time_ms = std::chrono::duration<double, std::milli>(end - begin).count();
    trial.best_tour = std::move(solved.best);
    if (trace_out) *trace_out = std::move(solved.trace);
    return trial;
}

}  // namespace

std::vector<TrialResult> run_trials(const TspInstance& inst, Algorithm algo, const RbacsConfig& config,
                                    int trials, std::uint64_t base_seed,
                                    std::vector<ConvergenceTrace>* traces) {
    if (trials < 1) throw std::domain_error("run_trials: need at least one trial");
    config.validate();

    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    if (traces) traces->assign(static_cast<std::size_t>(trials), ConvergenceTrace{});

    // Trials own disjoint state (derived seed, engine, fields) and write
    // into their own slot, so the schedule cannot affect any result.
    if (config.exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < trials; ++t)
            results[static_cast<std::size_t>(t)] =
                run_one(inst, algo, config, trial_seed(base_seed, t),
                        traces ? &(*traces)[static_cast<std::size_t>(t)] : nullptr);
    } else {
        for (int t = 0; t < trials; ++t)
            results[static_cast<std::size_t>(t)] =
                run_one(inst, algo, config, trial_seed(base_seed, t),
                        traces ? &(*traces)[static_cast<std::size_t>(t)] : nullptr);
    }
    return results;
}

SummaryStats summarize(std::span<const TrialResult> results) {
    if (results.empty()) throw std::domain_error("summarize: empty result list");
    SummaryStats stats;
    stats.trials = static_cast<int>(results.size());
    stats.min = results.front().best_length;
    stats.max = results.front().best_length;
    double sum = 0.0;
    for (const TrialResult& r : results) {
        sum += static_cast<double>(r.best_length);
        stats.min = std::min(stats.min, r.best_length);
        stats.max = std::max(stats.max, r.best_length);
    }
    stats.mean = sum / static_cast<double>(stats.trials);
    if (stats.trials > 1) {
        double ss = 0.0;
        for (const TrialResult& r : results) {
            const double d = static_cast<double>(r.best_length) - stats.mean;
            ss += d * d;
        }
        stats.stddev = std::sqrt(ss / static_cast<double>(stats.trials - 1));
    }
    return stats;
}

std::size_t emit_trace_csv(const ConvergenceTrace& trace, std::ostream& out) {
    out << "iteration,black_best,red_best,global_best\n";
    for (const TraceRow& row : trace.rows) {
        out << row.iteration << ',' << row.black_best << ',';
        if (row.red_best) out << *row.red_best;
        out << ',' << row.global_best << '\n';
    }
    if (!out) throw std::ios_base::failure("emit_trace_csv: write failed");
    return trace.rows.size();
}

ConvergenceTrace parse_trace_csv(std::istream& in) {
    ConvergenceTrace trace;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("parse_trace_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "iteration,black_best,red_best,global_best")
        throw std::invalid_argument("parse_trace_csv: unexpected header '" + line + "'");
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<std::string, 4> fields;
        std::size_t count = 0;
        std::size_t pos = 0;
        while (count < 4) {
            const std::size_t comma = line.find(',', pos);
            fields[count++] = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (count != 4) throw std::invalid_argument("parse_trace_csv: malformed row '" + line + "'");
        TraceRow row;
        row.iteration = std::stoi(fields[0]);
        row.black_best = std::stoll(fields[1]);
        if (!fields[2].empty()) row.red_best = std::stoll(fields[2]);
        row.global_best = std::stoll(fields[3]);
        trace.rows.push_back(row);
    }
    return trace;
}

std::string compare_table(const std::vector<std::pair<std::string, SummaryStats>>& rows,
                          std::int64_t reference_optimum) {
    if (rows.empty()) throw std::invalid_argument("compare_table: no rows");
    std::size_t label_width = std::string("algorithm").size();
    for (const auto& [label, stats] : rows) label_width = std::max(label_width, label.size());

    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-*s %10s %8s %8s\n", static_cast<int>(label_width), "algorithm",
                  "mean", "min", "excess");
    out << buf;
    for (const auto& [label, stats] : rows) {
        const double excess =
            100.0 * (stats.mean - static_cast<double>(reference_optimum)) / static_cast<double>(reference_optimum);
        std::snprintf(buf, sizeof(buf), "%-*s %10.3f %8lld %7.2f%%\n", static_cast<int>(label_width),
                      label.c_str(), stats.mean, static_cast<long long>(stats.min), excess);
        out << buf;
    }
    return out.str();
}

}  // namespace rbacs
