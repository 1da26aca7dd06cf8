#pragma once

// Single-colony Ant Colony System: the state transition rule, per-ant tour
// construction with local pheromone updates, and the full iteration loop.

#include <cstdint>
#include <span>
#include <vector>

#include "rbacs/pheromone.hpp"
#include "rbacs/rng.hpp"
#include "rbacs/trace.hpp"
#include "rbacs/tsp.hpp"

namespace rbacs {

/// Parameters of one ant group.
struct GroupParams {
    double q0 = 0.9;     // exploitation probability threshold
    double beta = 2.0;   // visibility exponent
    double rho = 0.1;    // local pheromone decay
    double alpha = 0.1;  // global pheromone decay
    int ants = 20;

    void validate() const;  // throws std::domain_error on out-of-range values
};

/// Precomputed eta^beta table for one (instance, beta) pair, so the
/// construction loop multiplies instead of calling pow.
struct VisibilityTable {
    int n = 0;
    std::vector<double> w;  // row-major, 0 on the diagonal

    static VisibilityTable build(const TspInstance& inst, double beta, Exec exec = Exec::serial);

    double at(int r, int s) const { return w[static_cast<std::size_t>(r) * n + s]; }
};

/// One ant mid-construction. `unvisited` materializes J_k(r); its order is
/// an implementation detail (swap-removal), not a contract.
struct AntState {
    int current = -1;
    std::vector<std::uint8_t> visited;
    std::vector<int> tour_so_far;
    std::vector<int> unvisited;

    void reset(int n, int start);
    void advance(int city);

    /// Builds the state an ant would have after walking `path`.
    static AntState from_path(std::span<const int> path, int n);
};

/// State transition rule: draw q uniform in [0,1]; exploit (argmax of
/// tau * eta^beta, ties to the lowest city index) when q <= q0, otherwise
/// sample from the biased-exploration distribution over the same weights.
int choose_next_city(const AntState& ant, const PheromoneField& field, const VisibilityTable& vis,
                     const GroupParams& params, Rng& rng);

/// Builds one complete tour per start, interleaving the ants step by step.
/// Every traversed edge, including each tour's closing edge, receives a
/// local update immediately after the move.
std::vector<Tour> construct_tours(PheromoneField& field, const VisibilityTable& vis,
                                  const TspInstance& inst, const GroupParams& params,
                                  std::span<const int> starts, Rng& rng);

enum class PheromoneInit { uniform, inverse_cost };

struct AcsOptions {
    PheromoneInit init = PheromoneInit::uniform;
    double c_init = 100.0;  // only read when init == inverse_cost
    DecayScope decay_scope = DecayScope::all_edges;
    int stagnation_limit = 0;  // 0 = disabled
    Exec exec = Exec::openmp;
};

struct SolveResult {
    Tour best;
    ConvergenceTrace trace;
    int iterations_run = 0;
};

/// Full ACS run: uniform tau0 = 1/(n * L_nn) initialization (L_nn from the
/// nearest-neighbor tour started at city 0), random ant placement each
/// iteration, and a global update with the best-so-far tour.
SolveResult run_acs(const TspInstance& inst, const GroupParams& params, int budget,
                    std::uint64_t seed, const AcsOptions& options = {});

}  // namespace rbacs
