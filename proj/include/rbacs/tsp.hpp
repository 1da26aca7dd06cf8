#pragma once

// Core TSP model: instances with precomputed integer distance matrices,
// tours, nearest-neighbor construction, and an exhaustive oracle for small
// instances.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rbacs/kernels.hpp"
#include "rbacs/tsplib.hpp"

namespace rbacs {

/// Symmetric n x n integer distance matrix with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> entries);  // validates shape and symmetry
    static DistanceMatrix from_coords(std::span<const NodeCoord> coords, Exec exec = Exec::serial);

    int n() const { return n_; }
    int at(int r, int s) const { return d_[static_cast<std::size_t>(r) * n_ + s]; }
    std::span<const int> raw() const { return d_; }

    /// Heuristic visibility eta = 1/distance, with zero-distance edges capped
    /// at 1/0.5 so weights stay finite for coincident points.
    double visibility(int r, int s) const {
        const int d = at(r, s);
        return 1.0 / (d > 0 ? static_cast<double>(d) : 0.5);
    }

private:
    int n_ = 0;
    std::vector<int> d_;
};

class TspInstance {
public:
    TspInstance(std::string name, DistanceMatrix dist);
    static TspInstance from_coords(std::string name, std::span<const NodeCoord> coords,
                                   Exec exec = Exec::serial);
    static TspInstance from_tsplib(const ParsedInstance& parsed, Exec exec = Exec::serial);

    int n() const { return dist_.n(); }
    const DistanceMatrix& dist() const { return dist_; }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    DistanceMatrix dist_;
};

struct Tour {
    std::vector<int> order;      // permutation of 0..n-1
    std::int64_t length = 0;     // closed-cycle length, exact integer
};

struct TourValidity {
    bool valid = false;
    std::string defect;  // empty when valid
};

/// Checks that order is a permutation of 0..n-1; the verdict names the
/// duplicated/missing cities otherwise.
TourValidity validate_tour(std::span<const int> order, int n);

/// Closed-cycle length including the edge order[n-1] -> order[0].
/// Throws std::invalid_argument (with the validate_tour defect) for
/// non-permutation input.
std::int64_t tour_length(std::span<const int> order, const TspInstance& inst);

/// Greedy tour: repeatedly move to the nearest unvisited city, breaking ties
/// toward the lowest index. Deterministic.
Tour nearest_neighbor_tour(const TspInstance& inst, int start);

/// Exact optimum by exhaustive enumeration with city 0 fixed first.
/// Refuses n > 11 (std::length_error).
Tour brute_force_optimum(const TspInstance& inst);

}  // namespace rbacs
