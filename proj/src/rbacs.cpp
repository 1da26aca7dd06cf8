#include "rbacs/rbacs.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace rbacs {

void RbacsConfig::validate() const {
    black.validate();
    red.validate();
    if (!(c_init > 0.0)) throw std::domain_error("RbacsConfig: c_init must be positive");
    if (budget < 1) throw std::domain_error("RbacsConfig: budget must be at least 1");
    if (stagnation_limit < 0) throw std::domain_error("RbacsConfig: stagnation_limit must be >= 0");
}

ColonyGroup make_group(GroupLabel label, const TspInstance& inst, const GroupParams& params,
                       double c_init, double tau0, std::uint64_t seed, Exec exec) {
    params.validate();
    return ColonyGroup{label,
                       params,
                       PheromoneField::init_inverse_cost(inst, c_init, tau0, exec),
                       VisibilityTable::build(inst, params.beta, exec),
                       Rng(seed),
                       std::nullopt};
}

Tour group_iteration(ColonyGroup& group, const TspInstance& inst) {
    std::vector<int> starts(static_cast<std::size_t>(group.params.ants));
    for (int& s : starts) s = group.rng.uniform_below(inst.n());
    const std::vector<Tour> tours = construct_tours(group.field, group.vis, inst, group.params, starts, group.rng);
    const Tour* best = &tours.front();
    for (const Tour& t : tours)
        if (t.length < best->length) best = &t;
    return *best;
}

Tour merge_results(const Tour& black_best, const Tour& red_best) {
    return red_best.length < black_best.length ? red_best : black_best;
}

SolveResult run_rbacs(const TspInstance& inst, const RbacsConfig& config, std::uint64_t seed) {
    config.validate();

    const Tour nn = nearest_neighbor_tour(inst, 0);
    const double tau0 = 1.0 / (static_cast<double>(inst.n()) * static_cast<double>(nn.length));
    const std::uint64_t black_seed = hash64(seed, 0);
    const std::uint64_t red_seed = config.mirror_group_seeds ? black_seed : hash64(seed, 1);

    std::array<ColonyGroup, 2> groups{
        make_group(GroupLabel::black, inst, config.black, config.c_init, tau0, black_seed, config.exec),
        make_group(GroupLabel::red, inst, config.red, config.c_init, tau0, red_seed, config.exec)};

    SolveResult result;
    std::int64_t global_best = std::numeric_limits<std::int64_t>::max();
    int stagnant = 0;

    auto advance_group = [&](ColonyGroup& group) {
        const Tour iteration_best = group_iteration(group, inst);
        if (!group.group_best || iteration_best.length < group.group_best->length)
            group.group_best = iteration_best;
        group.field.global_update(*group.group_best, group.params.alpha, config.decay_scope, config.exec);
    };

    // The groups share no mutable state, so the two bodies may run
    // concurrently without changing any result. Inside an enclosing parallel
    // region (e.g. trial-level parallelism) the groups run serially instead:
    // spawning nested teams per iteration costs far more than it buys.
    const bool parallel_groups = config.exec == Exec::openmp && !omp_in_parallel();

    for (int iteration = 1; iteration <= config.budget; ++iteration) {
        if (parallel_groups) {
#pragma omp parallel for num_threads(2) schedule(static)
            for (int g = 0; g < 2; ++g) advance_group(groups[static_cast<std::size_t>(g)]);
        } else {
            for (ColonyGroup& group : groups) advance_group(group);
        }

        const std::int64_t black_best = groups[0].group_best->length;
        const std::int64_t red_best = groups[1].group_best->length;
        const std::int64_t iteration_global = std::min(black_best, red_best);
        const bool improved = iteration_global < global_best;
        global_best = std::min(global_best, iteration_global);

        result.trace.rows.push_back({iteration, black_best, red_best, iteration_global});
        result.iterations_run = iteration;

        if (config.stagnation_limit > 0) {
            stagnant = improved ? 0 : stagnant + 1;
            if (stagnant >= config.stagnation_limit) break;
        }
    }

    result.best = merge_results(*groups[0].group_best, *groups[1].group_best);
    return result;
}

}  // namespace rbacs
