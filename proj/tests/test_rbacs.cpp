#include <doctest.h>

#include "rbacs/rbacs.hpp"

using namespace rbacs;

namespace {

TspInstance triangle() {
    return TspInstance("triangle", DistanceMatrix(3, {0, 1, 1, 1, 0, 1, 1, 1, 0}));
}

TspInstance random_instance(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<NodeCoord> coords;
    for (int i = 0; i < n; ++i)
        coords.push_back({i + 1, static_cast<double>(rng.uniform_below(1000)),
                          static_cast<double>(rng.uniform_below(1000))});
    return TspInstance::from_coords("random", coords);
}

double nn_tau0(const TspInstance& inst) {
    const Tour nn = nearest_neighbor_tour(inst, 0);
    return 1.0 / (static_cast<double>(inst.n()) * static_cast<double>(nn.length));
}

}  // namespace

TEST_CASE("config validation") {
    RbacsConfig config;
    CHECK_NOTHROW(config.validate());
    config.c_init = 0.0;
    CHECK_THROWS_AS(config.validate(), std::domain_error);
    config = RbacsConfig{};
    config.budget = 0;
    CHECK_THROWS_AS(config.validate(), std::domain_error);
    config = RbacsConfig{};
    config.red.rho = 1.5;
    CHECK_THROWS_AS(config.validate(), std::domain_error);
}

TEST_CASE("run_rbacs solves the triangle in one iteration") {
    RbacsConfig config;
    config.budget = 1;
    const SolveResult result = run_rbacs(triangle(), config, 5);
    CHECK(result.best.length == 3);
    REQUIRE(result.trace.rows.size() == 1);
    CHECK(result.trace.rows[0].black_best == 3);
    REQUIRE(result.trace.rows[0].red_best.has_value());
    CHECK(*result.trace.rows[0].red_best == 3);
    CHECK(result.trace.rows[0].global_best == 3);
}

TEST_CASE("group_iteration with one ant returns that ant's tour") {
    const TspInstance inst = triangle();
    GroupParams params{0.9, 2.0, 0.1, 0.1, 1};
    ColonyGroup group = make_group(GroupLabel::black, inst, params, 100.0, nn_tau0(inst), 11);
    const Tour best = group_iteration(group, inst);
    CHECK(best.length == 3);
    CHECK(validate_tour(best.order, 3).valid);
}

TEST_CASE("group_iteration is deterministic with q0 = 1 and a fixed stream") {
    const TspInstance inst = random_instance(10, 3);
    GroupParams params{1.0, 2.0, 0.1, 0.1, 4};
    ColonyGroup a = make_group(GroupLabel::black, inst, params, 100.0, nn_tau0(inst), 42);
    ColonyGroup b = make_group(GroupLabel::black, inst, params, 100.0, nn_tau0(inst), 42);
    CHECK(group_iteration(a, inst).order == group_iteration(b, inst).order);
}

TEST_CASE("merge_results picks the shorter tour, black on ties") {
    const Tour black{{0, 1, 2}, 430};
    const Tour red{{0, 2, 1}, 428};
    CHECK(merge_results(black, red).length == 428);
    CHECK(merge_results(black, red).order == red.order);

    const Tour red_tied{{0, 2, 1}, 430};
    CHECK(merge_results(black, red_tied).order == black.order);

    CHECK(merge_results(black, black).order == black.order);
}

TEST_CASE("field isolation: one group's operations never touch the other field") {
    const TspInstance inst = random_instance(20, 77);
    const double tau0 = nn_tau0(inst);
    ColonyGroup black = make_group(GroupLabel::black, inst, GroupParams{0.9, 2.0, 0.10, 0.10, 5},
                                   100.0, tau0, hash64(9, 0));
    ColonyGroup red = make_group(GroupLabel::red, inst, GroupParams{0.9, 2.0, 0.20, 0.15, 5},
                                 100.0, tau0, hash64(9, 1));

    const std::uint64_t black_before = black.field.checksum();
    for (int k = 0; k < 100; ++k) {
        const Tour best = group_iteration(red, inst);
        if (!red.group_best || best.length < red.group_best->length) red.group_best = best;
        red.field.global_update(*red.group_best, red.params.alpha);
    }
    CHECK(black.field.checksum() == black_before);

    const std::uint64_t red_after = red.field.checksum();
    for (int k = 0; k < 100; ++k) {
        const Tour best = group_iteration(black, inst);
        if (!black.group_best || best.length < black.group_best->length) black.group_best = best;
        black.field.global_update(*black.group_best, black.params.alpha);
    }
    CHECK(red.field.checksum() == red_after);
}

TEST_CASE("mirrored seeds with identical params make both groups identical") {
    const TspInstance inst = random_instance(15, 50);
    RbacsConfig config;
    config.red = config.black;
    config.mirror_group_seeds = true;
    config.budget = 40;
    const SolveResult result = run_rbacs(inst, config, 31);
    for (const TraceRow& row : result.trace.rows) {
        REQUIRE(row.red_best.has_value());
        CHECK(row.black_best == *row.red_best);
        CHECK(row.global_best == row.black_best);
    }
}

TEST_CASE("a group's trace equals an ACS run on the same substream") {
    // degenerate point: same params for both groups, Eq-6-style init on both
    // sides, seeds derived identically -> rbacs must reduce to two
    // independent ACS runs
    const TspInstance inst = random_instance(15, 60);
    RbacsConfig config;
    config.red = config.black;
    config.budget = 30;
    config.exec = Exec::serial;
    const SolveResult both = run_rbacs(inst, config, 4);

    AcsOptions options;
    options.init = PheromoneInit::inverse_cost;
    options.c_init = config.c_init;
    options.exec = Exec::serial;
    const SolveResult black_alone = run_acs(inst, config.black, config.budget, hash64(4, 0), options);
    const SolveResult red_alone = run_acs(inst, config.red, config.budget, hash64(4, 1), options);

    REQUIRE(both.trace.rows.size() == black_alone.trace.rows.size());
    for (std::size_t i = 0; i < both.trace.rows.size(); ++i) {
        CHECK(both.trace.rows[i].black_best == black_alone.trace.rows[i].black_best);
        CHECK(*both.trace.rows[i].red_best == red_alone.trace.rows[i].black_best);
    }
    CHECK(both.best.length == std::min(black_alone.best.length, red_alone.best.length));
}

TEST_CASE("global trace is the pointwise minimum and never increases") {
    const TspInstance inst = random_instance(25, 90);
    RbacsConfig config;
    config.budget = 50;
    const SolveResult result = run_rbacs(inst, config, 12);
    REQUIRE(result.trace.rows.size() == 50);
    std::int64_t previous_black = std::numeric_limits<std::int64_t>::max();
    std::int64_t previous_red = std::numeric_limits<std::int64_t>::max();
    std::int64_t previous_global = std::numeric_limits<std::int64_t>::max();
    for (const TraceRow& row : result.trace.rows) {
        REQUIRE(row.red_best.has_value());
        CHECK(row.global_best == std::min(row.black_best, *row.red_best));
        CHECK(row.black_best <= previous_black);
        CHECK(*row.red_best <= previous_red);
        CHECK(row.global_best <= previous_global);
        previous_black = row.black_best;
        previous_red = *row.red_best;
        previous_global = row.global_best;
    }
    CHECK(result.best.length == result.trace.rows.back().global_best);
}

TEST_CASE("serial and openmp execution produce identical results") {
    const TspInstance inst = random_instance(18, 14);
    RbacsConfig config;
    config.budget = 30;
    config.exec = Exec::serial;
    const SolveResult serial = run_rbacs(inst, config, 99);
    config.exec = Exec::openmp;
    const SolveResult parallel = run_rbacs(inst, config, 99);
    CHECK(serial.best.order == parallel.best.order);
    CHECK(serial.best.length == parallel.best.length);
    CHECK(serial.trace == parallel.trace);
}

TEST_CASE("stagnation cutoff applies to the shared best") {
    RbacsConfig config;
    config.budget = 500;
    config.stagnation_limit = 4;
    const SolveResult result = run_rbacs(triangle(), config, 2);
    CHECK(result.iterations_run == 5);  // found at iteration 1, 4 stagnant ones after
    CHECK(result.best.length == 3);
}
