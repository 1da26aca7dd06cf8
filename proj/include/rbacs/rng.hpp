#pragma once

#include <cstdint>
#include <random>

namespace rbacs {

/// SplitMix64 finalizer. This is the fixed public mixing function behind all
/// derived seeds (per trial, per ant group), so adding trials or groups never
/// perturbs the streams of existing ones.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ (b + 0x9e3779b97f4a7c15ull));
}

/// Deterministic random stream. std::mt19937_64 output is fully specified by
/// the standard, and the uniform mappings below bypass the library-defined
/// distributions, so a given seed reproduces the same draws everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in {0, ..., n-1}, unbiased (rejection on the top sliver).
    int uniform_below(int n) {
        const auto un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        std::uint64_t x = gen_();
        while (x >= limit) x = gen_();
        return static_cast<int>(x % un);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace rbacs
