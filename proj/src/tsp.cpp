#include "rbacs/tsp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rbacs {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {
    if (n_ < 1) throw std::invalid_argument("DistanceMatrix: n must be positive");
    if (d_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("DistanceMatrix: expected " + std::to_string(n_) + "x" +
                                    std::to_string(n_) + " entries");
    for (int r = 0; r < n_; ++r) {
        if (at(r, r) != 0) throw std::invalid_argument("DistanceMatrix: nonzero diagonal");
        for (int s = r + 1; s < n_; ++s) {
            if (at(r, s) < 0) throw std::invalid_argument("DistanceMatrix: negative entry");
            if (at(r, s) != at(s, r)) throw std::invalid_argument("DistanceMatrix: not symmetric");
        }
    }
}

DistanceMatrix DistanceMatrix::from_coords(std::span<const NodeCoord> coords, Exec exec) {
    const int n = static_cast<int>(coords.size());
    std::vector<double> xs(coords.size()), ys(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        xs[i] = coords[i].x;
        ys[i] = coords[i].y;
    }
    std::vector<int> entries(static_cast<std::size_t>(n) * n);
    kernels::euc2d_matrix(entries, xs, ys, exec);
    return DistanceMatrix(n, std::move(entries));
}

TspInstance::TspInstance(std::string name, DistanceMatrix dist)
    : name_(std::move(name)), dist_(std::move(dist)) {
    if (dist_.n() < 3) throw std::invalid_argument("TspInstance: need at least 3 cities");
}

TspInstance TspInstance::from_coords(std::string name, std::span<const NodeCoord> coords, Exec exec) {
    return TspInstance(std::move(name), DistanceMatrix::from_coords(coords, exec));
}

TspInstance TspInstance::from_tsplib(const ParsedInstance& parsed, Exec exec) {
    return from_coords(parsed.header.name, parsed.coords, exec);
}

TourValidity validate_tour(std::span<const int> order, int n) {
    if (static_cast<int>(order.size()) != n)
        return {false, "wrong cardinality: expected " + std::to_string(n) + " cities, got " +
                           std::to_string(order.size())};
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::string defect;
    for (const int city : order) {
        if (city < 0 || city >= n) {
            if (!defect.empty()) defect += ", ";
            defect += "city " + std::to_string(city) + " out of range";
        } else {
            ++seen[static_cast<std::size_t>(city)];
        }
    }
    for (int city = 0; city < n; ++city)
        if (seen[static_cast<std::size_t>(city)] > 1) {
            if (!defect.empty()) defect += ", ";
            defect += "city " + std::to_string(city) + " duplicated";
        }
    for (int city = 0; city < n; ++city)
        if (seen[static_cast<std::size_t>(city)] == 0) {
            if (!defect.empty()) defect += ", ";
            defect += "city " + std::to_string(city) + " missing";
        }
    return {defect.empty(), defect};
}

std::int64_t tour_length(std::span<const int> order, const TspInstance& inst) {
    const TourValidity verdict = validate_tour(order, inst.n());
    if (!verdict.valid) throw std::invalid_argument("tour_length: " + verdict.defect);
    std::int64_t total = 0;
    int prev = order.back();
    for (const int city : order) {
        total += inst.dist().at(prev, city);
        prev = city;
    }
    return total;
}

Tour nearest_neighbor_tour(const TspInstance& inst, int start) {
    const int n = inst.n();
    if (start < 0 || start >= n)
        throw std::out_of_range("nearest_neighbor_tour: start " + std::to_string(start) +
                                " out of range for n=" + std::to_string(n));
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    Tour tour;
    tour.order.reserve(static_cast<std::size_t>(n));
    tour.order.push_back(start);
    visited[static_cast<std::size_t>(start)] = 1;
    int current = start;
    for (int step = 1; step < n; ++step) {
        int next = -1;
        int best = std::numeric_limits<int>::max();
        for (int city = 0; city < n; ++city) {
            // strict < keeps the lowest index on distance ties
            if (!visited[static_cast<std::size_t>(city)] && inst.dist().at(current, city) < best) {
                best = inst.dist().at(current, city);
                next = city;
            }
        }
        tour.order.push_back(next);
        visited[static_cast<std::size_t>(next)] = 1;
        tour.length += best;
        current = next;
    }
    tour.length += inst.dist().at(current, start);
    return tour;
}

Tour brute_force_optimum(const TspInstance& inst) {
    const int n = inst.n();
    if (n > 11)
        throw std::length_error("brute_force_optimum: n=" + std::to_string(n) +
                                " exceeds the enumeration limit of 11");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Tour best;
    best.length = std::numeric_limits<std::int64_t>::max();
    // city 0 stays first; permute the rest
    do {
        std::int64_t len = inst.dist().at(perm.back(), 0);
        for (int i = 1; i < n; ++i) len += inst.dist().at(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(i)]);
        if (len < best.length) {
            best.length = len;
            best.order = perm;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
}

}  // namespace rbacs
