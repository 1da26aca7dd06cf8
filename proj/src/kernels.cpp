#include "rbacs/kernels.hpp"

#include <bit>
#include <cmath>

#include "rbacs/rng.hpp"

namespace rbacs::kernels {

namespace {

inline double floored_cost(int d) { return d > 0 ? static_cast<double>(d) : 0.5; }

inline int nint_distance(double dx, double dy) {
    return static_cast<int>(std::sqrt(dx * dx + dy * dy) + 0.5);
}

inline std::uint64_t checksum_term(std::size_t i, double v) {
    return mix64(std::bit_cast<std::uint64_t>(v) + mix64(static_cast<std::uint64_t>(i)));
}

}  // namespace

void scale_serial(std::span<double> x, double factor) {
    for (double& v : x) v *= factor;
}

void scale_omp(std::span<double> x, double factor) {
    const auto size = static_cast<std::int64_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < size; ++i) x[i] *= factor;
}

void scale(std::span<double> x, double factor, Exec exec) {
    exec == Exec::openmp ? scale_omp(x, factor) : scale_serial(x, factor);
}

void fill_off_diagonal_serial(std::span<double> out, int n, double value) {
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) out[static_cast<std::size_t>(r) * n + s] = r == s ? 0.0 : value;
}

void fill_off_diagonal_omp(std::span<double> out, int n, double value) {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) out[static_cast<std::size_t>(r) * n + s] = r == s ? 0.0 : value;
}

void fill_off_diagonal(std::span<double> out, int n, double value, Exec exec) {
    exec == Exec::openmp ? fill_off_diagonal_omp(out, n, value)
                         : fill_off_diagonal_serial(out, n, value);
}

void visibility_pow_serial(std::span<double> out, std::span<const int> dist, int n, double beta) {
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const std::size_t i = static_cast<std::size_t>(r) * n + s;
            out[i] = r == s ? 0.0 : std::pow(1.0 / floored_cost(dist[i]), beta);
        }
}

void visibility_pow_omp(std::span<double> out, std::span<const int> dist, int n, double beta) {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const std::size_t i = static_cast<std::size_t>(r) * n + s;
            out[i] = r == s ? 0.0 : std::pow(1.0 / floored_cost(dist[i]), beta);
        }
}

void visibility_pow(std::span<double> out, std::span<const int> dist, int n, double beta, Exec exec) {
    exec == Exec::openmp ? visibility_pow_omp(out, dist, n, beta)
                         : visibility_pow_serial(out, dist, n, beta);
}

int inverse_cost_serial(std::span<double> out, std::span<const int> dist, int n, double c) {
    int floored = 0;
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const std::size_t i = static_cast<std::size_t>(r) * n + s;
            if (r == s) {
                out[i] = 0.0;
            } else {
                floored += dist[i] == 0;
                out[i] = c / floored_cost(dist[i]);
            }
        }
    return floored;
}

int inverse_cost_omp(std::span<double> out, std::span<const int> dist, int n, double c) {
    int floored = 0;
#pragma omp parallel for schedule(static) reduction(+ : floored)
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const std::size_t i = static_cast<std::size_t>(r) * n + s;
            if (r == s) {
                out[i] = 0.0;
            } else {
                floored += dist[i] == 0;
                out[i] = c / floored_cost(dist[i]);
            }
        }
    return floored;
}

int inverse_cost(std::span<double> out, std::span<const int> dist, int n, double c, Exec exec) {
    return exec == Exec::openmp ? inverse_cost_omp(out, dist, n, c)
                                : inverse_cost_serial(out, dist, n, c);
}

void euc2d_matrix_serial(std::span<int> out, std::span<const double> xs, std::span<const double> ys) {
    const int n = static_cast<int>(xs.size());
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            out[static_cast<std::size_t>(r) * n + s] =
                r == s ? 0 : nint_distance(xs[r] - xs[s], ys[r] - ys[s]);
}

void euc2d_matrix_omp(std::span<int> out, std::span<const double> xs, std::span<const double> ys) {
    const int n = static_cast<int>(xs.size());
#pragma omp parallel for schedule(static)
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            out[static_cast<std::size_t>(r) * n + s] =
                r == s ? 0 : nint_distance(xs[r] - xs[s], ys[r] - ys[s]);
}

void euc2d_matrix(std::span<int> out, std::span<const double> xs, std::span<const double> ys, Exec exec) {
    exec == Exec::openmp ? euc2d_matrix_omp(out, xs, ys) : euc2d_matrix_serial(out, xs, ys);
}

std::uint64_t matrix_checksum_serial(std::span<const double> x) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += checksum_term(i, x[i]);
    return acc;
}

std::uint64_t matrix_checksum_omp(std::span<const double> x) {
    const auto size = static_cast<std::int64_t>(x.size());
    std::uint64_t acc = 0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
    for (std::int64_t i = 0; i < size; ++i) acc += checksum_term(static_cast<std::size_t>(i), x[i]);
    return acc;
}

std::uint64_t matrix_checksum(std::span<const double> x, Exec exec) {
    return exec == Exec::openmp ? matrix_checksum_omp(x) : matrix_checksum_serial(x);
}

}  // namespace rbacs::kernels
