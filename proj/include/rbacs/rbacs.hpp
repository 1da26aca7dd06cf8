#pragma once

// Red-Black ACS: two ant groups with independent pheromone fields and their
// own parameter sets, searching in parallel and merging answers only at the
// end.

#include <cstdint>
#include <optional>

#include "rbacs/acs.hpp"

namespace rbacs {

enum class GroupLabel { black, red };

struct RbacsConfig {
    GroupParams black{0.9, 2.0, 0.10, 0.10, 20};
    GroupParams red{0.9, 2.0, 0.20, 0.15, 20};
    double c_init = 100.0;      // inverse-cost initialization constant
    int budget = 2000;          // iteration cap
    int stagnation_limit = 0;   // consecutive non-improving iterations before early stop; 0 = disabled
    DecayScope decay_scope = DecayScope::all_edges;
    bool mirror_group_seeds = false;  // both groups draw the black substream; diagnostic use
    Exec exec = Exec::openmp;

    void validate() const;
};

/// One group's private search state. The field is written only by this
/// group's ants; nothing here is shared with the other group.
struct ColonyGroup {
    GroupLabel label = GroupLabel::black;
    GroupParams params;
    PheromoneField field;
    VisibilityTable vis;
    Rng rng;
    std::optional<Tour> group_best;
};

/// Builds a group with an inverse-cost-initialized field and its own rng
/// substream.
ColonyGroup make_group(GroupLabel label, const TspInstance& inst, const GroupParams& params,
                       double c_init, double tau0, std::uint64_t seed, Exec exec = Exec::serial);

/// One iteration of one group: place ants, construct tours against the
/// group's own field, return the shortest (first ant wins ties). Mutates
/// only the group's own state.
Tour group_iteration(ColonyGroup& group, const TspInstance& inst);

/// Shorter of the two tours; ties go to black.
Tour merge_results(const Tour& black_best, const Tour& red_best);

/// Full RB-ACS run. Group substreams derive from the trial seed via
/// hash64(seed, 0|1), so results are identical whether the groups execute
/// serially or concurrently.
SolveResult run_rbacs(const TspInstance& inst, const RbacsConfig& config, std::uint64_t seed);

}  // namespace rbacs
