#include "rbacs/acs.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rbacs {

void GroupParams::validate() const {
    if (!(q0 >= 0.0 && q0 <= 1.0)) throw std::domain_error("GroupParams: q0 must lie in [0,1]");
    if (!(beta > 0.0)) throw std::domain_error("GroupParams: beta must be positive");
    if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("GroupParams: rho must lie in (0,1)");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("GroupParams: alpha must lie in (0,1)");
    if (ants < 1) throw std::domain_error("GroupParams: need at least one ant");
}

VisibilityTable VisibilityTable::build(const TspInstance& inst, double beta, Exec exec) {
    VisibilityTable table;
    table.n = inst.n();
    table.w.resize(static_cast<std::size_t>(table.n) * table.n);
    kernels::visibility_pow(table.w, inst.dist().raw(), table.n, beta, exec);
    return table;
}

void AntState::reset(int n, int start) {
    current = start;
    visited.assign(static_cast<std::size_t>(n), 0);
    visited[static_cast<std::size_t>(start)] = 1;
    tour_so_far.clear();
    tour_so_far.reserve(static_cast<std::size_t>(n));
    tour_so_far.push_back(start);
    unvisited.clear();
    unvisited.reserve(static_cast<std::size_t>(n) - 1);
    for (int city = 0; city < n; ++city)
        if (city != start) unvisited.push_back(city);
}

void AntState::advance(int city) {
    const auto it = std::find(unvisited.begin(), unvisited.end(), city);
    if (it == unvisited.end()) throw std::logic_error("AntState::advance: city already visited");
    *it = unvisited.back();
    unvisited.pop_back();
    visited[static_cast<std::size_t>(city)] = 1;
    tour_so_far.push_back(city);
    current = city;
}

AntState AntState::from_path(std::span<const int> path, int n) {
    if (path.empty()) throw std::invalid_argument("AntState::from_path: path must be nonempty");
    AntState ant;
    ant.reset(n, path.front());
    for (std::size_t i = 1; i < path.size(); ++i) ant.advance(path[i]);
    return ant;
}

int choose_next_city(const AntState& ant, const PheromoneField& field, const VisibilityTable& vis,
                     const GroupParams& params, Rng& rng) {
    const std::span<const int> candidates = ant.unvisited;
    if (candidates.empty()) throw std::logic_error("choose_next_city: no unvisited city left");
    const int r = ant.current;

    const double q = rng.uniform01();
    if (q <= params.q0) {
        // exploitation
        int best = candidates[0];
        double best_w = field.at(r, best) * vis.at(r, best);
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            const int u = candidates[i];
            const double w = field.at(r, u) * vis.at(r, u);
            if (w > best_w || (w == best_w && u < best)) {
                best_w = w;
                best = u;
            }
        }
        return best;
    }

    // biased exploration: roulette wheel over tau * eta^beta
    double total = 0.0;
    for (const int u : candidates) total += field.at(r, u) * vis.at(r, u);
    if (!(total > 0.0)) {
        // every weight underflowed; degenerate to the lowest-index candidate
        return *std::min_element(candidates.begin(), candidates.end());
    }
    const double draw = rng.uniform01() * total;
    double acc = 0.0;
    for (const int u : candidates) {
        acc += field.at(r, u) * vis.at(r, u);
        if (draw < acc) return u;
    }
    return candidates.back();  // rounding slack
}

std::vector<Tour> construct_tours(PheromoneField& field, const VisibilityTable& vis,
                                  const TspInstance& inst, const GroupParams& params,
                                  std::span<const int> starts, Rng& rng) {
    params.validate();
    const int n = inst.n();
    if (static_cast<int>(starts.size()) != params.ants)
        throw std::invalid_argument("construct_tours: expected one start per ant");
    for (const int s : starts)
        if (s < 0 || s >= n) throw std::out_of_range("construct_tours: start city out of range");

    std::vector<AntState> ants(starts.size());
    for (std::size_t k = 0; k < starts.size(); ++k) ants[k].reset(n, starts[k]);

    // Ants advance in lockstep; each move locally updates the traversed edge
    // before the next ant chooses.
    for (int step = 1; step < n; ++step) {
        for (AntState& ant : ants) {
            const int from = ant.current;
            const int next = choose_next_city(ant, field, vis, params, rng);
            field.local_update(from, next, params.rho);
            ant.advance(next);
        }
    }
    for (AntState& ant : ants) field.local_update(ant.current, ant.tour_so_far.front(), params.rho);

    std::vector<Tour> tours;
    tours.reserve(ants.size());
    for (AntState& ant : ants) {
        Tour tour;
        tour.order = std::move(ant.tour_so_far);
        tour.length = tour_length(tour.order, inst);
        tours.push_back(std::move(tour));
    }
    return tours;
}

SolveResult run_acs(const TspInstance& inst, const GroupParams& params, int budget,
                    std::uint64_t seed, const AcsOptions& options) {
    params.validate();
    if (budget < 1) throw std::domain_error("run_acs: budget must be at least 1");

    const Tour nn = nearest_neighbor_tour(inst, 0);
    const double tau0 = 1.0 / (static_cast<double>(inst.n()) * static_cast<double>(nn.length));
    PheromoneField field =
        options.init == PheromoneInit::uniform
            ? PheromoneField::init_uniform(inst.n(), tau0, options.exec)
            : PheromoneField::init_inverse_cost(inst, options.c_init, tau0, options.exec);
    const VisibilityTable vis = VisibilityTable::build(inst, params.beta, options.exec);
    Rng rng(seed);

    SolveResult result;
    result.best.length = std::numeric_limits<std::int64_t>::max();
    std::vector<int> starts(static_cast<std::size_t>(params.ants));
    int stagnant = 0;

    for (int iteration = 1; iteration <= budget; ++iteration) {
        for (int& s : starts) s = rng.uniform_below(inst.n());
        const std::vector<Tour> tours = construct_tours(field, vis, inst, params, starts, rng);

        const Tour* iteration_best = &tours.front();
        for (const Tour& t : tours)
            if (t.length < iteration_best->length) iteration_best = &t;

        bool improved = false;
        if (iteration_best->length < result.best.length) {
            result.best = *iteration_best;
            improved = true;
        }
        field.global_update(result.best, params.alpha, options.decay_scope, options.exec);

        result.trace.rows.push_back({iteration, result.best.length, std::nullopt, result.best.length});
        result.iterations_run = iteration;

        if (options.stagnation_limit > 0) {
            stagnant = improved ? 0 : stagnant + 1;
            if (stagnant >= options.stagnation_limit) break;
        }
    }
    return result;
}

}  // namespace rbacs
