#pragma once

#include "gmprune/corrupt.hpp"
#include "gmprune/types.hpp"

#include <cstdint>

namespace gmprune {

/// Parameters of the two-component synthetic benchmark: n samples from
/// N(clean_mean, cov), then a psi fraction replaced by draws from
/// N(adversarial_mean, cov). Defaults follow the 2-D toy setup
/// (clean at the origin, adversarial cluster at (-5, 5), psi = 0.2).
struct ToyGmmSpec {
    Index n = 1000;
    Vector clean_mean = (Vector(2) << 0.0, 0.0).finished();
    Matrix cov = [] {
        Matrix c(2, 2);
        c << 1.0, 0.5, 0.5, 1.0;
        return c;
    }();
    Vector adversarial_mean = (Vector(2) << -5.0, 5.0).finished();
    double psi = 0.2;
    std::uint64_t generation_seed = 0;
    std::uint64_t corruption_seed = 0;
};

/// The clean component only (all flags CLEAN).
EmbeddingSet toy_gmm_clean(const ToyGmmSpec& spec);

/// Clean component plus injected adversarial cluster, flags marking the
/// replaced rows.
EmbeddingSet toy_gmm(const ToyGmmSpec& spec);

}  // namespace gmprune
