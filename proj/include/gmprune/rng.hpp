#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gmprune {

/// Deterministic random source. The generator is std::mt19937_64, whose
/// output sequence is pinned by the C++ standard, so equal seeds give equal
/// streams on every platform. All derived draws are fixed arithmetic on that
/// stream:
///   - uniform01():      high 53 bits of one output, scaled by 2^-53
///   - normal():         Box-Muller on two uniform01 draws (no caching)
///   - uniform_index(n): rejection sampling on raw outputs (no modulo bias)
/// Single-owner: not safe to share across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal draw. Consumes exactly two uniform01 values
    /// (plus retries while the first is zero).
    double normal();

    /// Uniform integer in [0, n). n must be >= 1.
    std::uint64_t uniform_index(std::uint64_t n);

    /// k distinct indices from [0, n), uniform, in selection order
    /// (partial Fisher-Yates).
    std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n, std::uint64_t k);

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace gmprune
