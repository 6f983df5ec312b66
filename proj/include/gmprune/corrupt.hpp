#pragma once

#include "gmprune/rng.hpp"
#include "gmprune/types.hpp"

#include <cstdint>

namespace gmprune {

enum class CorruptionMode { GaussianCluster, PointAtMagnitude, MeanHijack, LabelFlip };

struct CorruptionSpec {
    double psi = 0.0;  // fraction of rows perturbed, in [0, 1/2)
    CorruptionMode mode = CorruptionMode::GaussianCluster;
    std::uint64_t seed = 0;
    // GaussianCluster
    Vector cluster_mean;
    Matrix cluster_cov;
    // PointAtMagnitude: corrupt rows land on magnitude * e_1
    double magnitude = 0.0;
    // MeanHijack: the replaced rows move the empirical mean here, exactly
    Vector target;
    // LabelFlip: 0 means infer as max(label) + 1
    std::uint32_t num_classes = 0;
};

/// Corrupt-to-clean ratio alpha = psi / (1 - psi).
double alpha_from_psi(double psi);

/// Replace floor(psi * n) uniformly chosen rows according to the mode and
/// flag them CORRUPT (LabelFlip resamples labels instead, features
/// untouched). Clean rows pass through bit-exactly. The input must carry no
/// CORRUPT flags.
EmbeddingSet inject(const EmbeddingSet& set, const CorruptionSpec& spec);

/// The single point whose appending relocates the empirical mean of the
/// grown set to `target` exactly: x_B = (n+1) * target - sum of rows.
Vector mean_hijack_point(const EmbeddingSet& set, const Vector& target);

/// Change in the distance-to-centroid importance score when the centroid
/// shifts by delta_mu: d'(x) - d(x) = ||delta_mu||^2 - 2 (x - mu_g)' delta_mu.
double score_deviation(const Vector& x, const Vector& mu_g, const Vector& delta_mu);

/// n draws from N(mean, cov), one row per sample. Each row consumes d
/// normal draws, transformed by the Cholesky factor of cov.
Matrix sample_gaussian(Index n, const Vector& mean, const Matrix& cov, Rng& rng);

}  // namespace gmprune
