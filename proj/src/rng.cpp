#include "gmprune/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gmprune {

double Rng::normal() {
    double u1 = uniform01();
    while (u1 == 0.0) {
        u1 = uniform01();
    }
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index: n must be >= 1");
    }
    // reject the top partial block so every residue is equally likely
    const std::uint64_t rem = (0xFFFFFFFFFFFFFFFFull % n + 1) % n;  // 2^64 mod n
    const std::uint64_t limit = 0ull - rem;                         // wraps to 2^64 - rem
    std::uint64_t v = next_u64();
    while (rem != 0 && v >= limit) {
        v = next_u64();
    }
    return v % n;
}

std::vector<std::uint64_t> Rng::sample_without_replacement(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        throw std::invalid_argument("sample_without_replacement: k > n");
    }
    std::vector<std::uint64_t> idx(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t j = i + uniform_index(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace gmprune
