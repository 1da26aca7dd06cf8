#pragma once

// Data-parallel kernels behind the distance and pheromone matrices. Every
// kernel comes in a serial reference version and an OpenMP version that must
// produce bit-identical output; tests/test_kernels.cpp holds them to that and
// tools/kernel_bench compares their throughput.

#include <cstdint>
#include <span>

namespace rbacs {

enum class Exec { serial, openmp };

namespace kernels {

// x[i] *= factor
void scale_serial(std::span<double> x, double factor);
void scale_omp(std::span<double> x, double factor);
void scale(std::span<double> x, double factor, Exec exec);

// out[r*n+s] = value for r != s, 0 on the diagonal
void fill_off_diagonal_serial(std::span<double> out, int n, double value);
void fill_off_diagonal_omp(std::span<double> out, int n, double value);
void fill_off_diagonal(std::span<double> out, int n, double value, Exec exec);

// out[r*n+s] = c / max(dist[r*n+s], 0.5) for r != s, 0 on the diagonal.
// Returns the number of zero-distance edges that hit the 0.5 floor
// (counting each undirected edge twice, once per direction).
int inverse_cost_serial(std::span<double> out, std::span<const int> dist, int n, double c);
int inverse_cost_omp(std::span<double> out, std::span<const int> dist, int n, double c);
int inverse_cost(std::span<double> out, std::span<const int> dist, int n, double c, Exec exec);

// out[r*n+s] = (1 / max(dist[r*n+s], 0.5))^beta for r != s, 0 on the diagonal
void visibility_pow_serial(std::span<double> out, std::span<const int> dist, int n, double beta);
void visibility_pow_omp(std::span<double> out, std::span<const int> dist, int n, double beta);
void visibility_pow(std::span<double> out, std::span<const int> dist, int n, double beta, Exec exec);

// out[r*n+s] = nearest-integer Euclidean distance between points r and s
void euc2d_matrix_serial(std::span<int> out, std::span<const double> xs, std::span<const double> ys);
void euc2d_matrix_omp(std::span<int> out, std::span<const double> xs, std::span<const double> ys);
void euc2d_matrix(std::span<int> out, std::span<const double> xs, std::span<const double> ys, Exec exec);

// Content hash over the bit patterns of x. Each term depends on (index,
// value) and terms combine by wrapping addition, so the result is exact and
// independent of evaluation order.
std::uint64_t matrix_checksum_serial(std::span<const double> x);
std::uint64_t matrix_checksum_omp(std::span<const double> x);
std::uint64_t matrix_checksum(std::span<const double> x, Exec exec);

}  // namespace kernels
}  // namespace rbacs
