#pragma once

// Multi-trial experiment runner: repeated independent solver runs with
// derived seeds, summary statistics, convergence trace CSVs, and a
// comparison table against a reference optimum.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbacs/rbacs.hpp"

namespace rbacs {

enum class Algorithm { acs, rbacs };

struct TrialResult {
    std::uint64_t seed = 0;
    std::int64_t best_length = 0;
    Tour best_tour;
    int iterations_run = 0;
    double wall_time_ms = 0.0;  // informational only; never part of reproducible output
};

struct SummaryStats {
    double mean = 0.0;
    std::int64_t min = 0;
    std::int64_t max = 0;
    double stddev = 0.0;  // sample standard deviation, 0 for a single trial
    int trials = 0;
};

/// Per-trial seed: hash64(base_seed, index). Adding trials never perturbs
/// earlier trials.
std::uint64_t trial_seed(std::uint64_t base_seed, int index);

/// Runs `trials` independent solver runs. For Algorithm::acs the black
/// group's parameters apply and the field starts uniform at tau0; rbacs uses
/// the full config. Results (and traces, when requested) are bit-for-bit
/// reproducible from (base_seed, config) and independent of execution order.
std::vector<TrialResult> run_trials(const TspInstance& inst, Algorithm algo, const RbacsConfig& config,
                                    int trials, std::uint64_t base_seed,
                                    std::vector<ConvergenceTrace>* traces = nullptr);

SummaryStats summarize(std::span<const TrialResult> results);

/// Writes "iteration,black_best,red_best,global_best" rows; the red column
/// is empty for single-colony traces. Returns the data row count.
std::size_t emit_trace_csv(const ConvergenceTrace& trace, std::ostream& out);

/// Inverse of emit_trace_csv.
ConvergenceTrace parse_trace_csv(std::istream& in);

/// Renders one row per (label, stats) pair with mean, min, and excess of the
/// mean over the reference optimum.
std::string compare_table(const std::vector<std::pair<std::string, SummaryStats>>& rows,
                          std::int64_t reference_optimum);

}  // namespace rbacs
