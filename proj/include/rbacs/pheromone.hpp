#pragma once

// Pheromone trail storage and the three trail rules: inverse-cost
// initialization, per-move local updating, and end-of-iteration global
// updating.

#include <cstdint>
#include <span>
#include <vector>

#include "rbacs/kernels.hpp"
#include "rbacs/tsp.hpp"

namespace rbacs {

/// Which edges the global updating rule evaporates. `all_edges` follows the
/// update formula literally (every edge decays each iteration, non-best
/// edges receive a zero deposit); `best_tour_only` is the classic ACS
/// behavior where only the reinforced edges are touched.
enum class DecayScope { all_edges, best_tour_only };

/// Dense symmetric pheromone matrix. Both (r,s) and (s,r) are stored and
/// updated together, trading memory for branch-free lookups in the tour
/// construction loop.
class PheromoneField {
public:
    /// Every off-diagonal entry set to tau0 (the classic ACS start).
    static PheromoneField init_uniform(int n, double tau0, Exec exec = Exec::serial);

    /// Entry (r,s) set to c / cost(r,s), so expensive edges start with less
    /// pheromone. Zero-cost edges use the 0.5 cost floor; how many did is
    /// recorded and queryable via zero_cost_edges(). tau0 is kept as the
    /// local-update deposit target.
    static PheromoneField init_inverse_cost(const TspInstance& inst, double c, double tau0,
                                            Exec exec = Exec::serial);

    int n() const { return n_; }
    double tau0() const { return tau0_; }
    double c_init() const { return c_init_; }
    int zero_cost_edges() const { return zero_cost_edges_; }

    double at(int r, int s) const { return tau_[static_cast<std::size_t>(r) * n_ + s]; }

    /// Writes both (r,s) and (s,r). Intended for tests and tooling.
    void set(int r, int s, double value);

    /// tau(r,s) <- (1-rho) * tau(r,s) + rho * tau0. Requires r != s and
    /// rho in (0,1).
    void local_update(int r, int s, double rho);

    /// tau <- (1-alpha) * tau + alpha * dtau with dtau = 1/best.length on the
    /// best tour's edges and 0 elsewhere. Under `all_edges` every entry
    /// decays; under `best_tour_only` only the best tour's edges are touched.
    void global_update(const Tour& best, double alpha, DecayScope scope = DecayScope::all_edges,
                       Exec exec = Exec::serial);

    /// Exact content hash; used by the field-isolation tests.
    std::uint64_t checksum(Exec exec = Exec::serial) const;

    std::span<const double> raw() const { return tau_; }

private:
    PheromoneField(int n, double tau0, double c_init);

    int n_ = 0;
    double tau0_ = 0.0;
    double c_init_ = 0.0;
    int zero_cost_edges_ = 0;
    std::vector<double> tau_;
};

}  // namespace rbacs
