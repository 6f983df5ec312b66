#include "gmprune/simulate.hpp"

namespace gmprune {

EmbeddingSet toy_gmm_clean(const ToyGmmSpec& spec) {
    Rng rng(spec.generation_seed);
    Matrix data = sample_gaussian(spec.n, spec.clean_mean, spec.cov, rng);
    std::vector<Flag> flags(static_cast<std::size_t>(spec.n), Flag::Clean);
    return EmbeddingSet(std::move(data), std::nullopt, std::move(flags));
}

EmbeddingSet toy_gmm(const ToyGmmSpec& spec) {
    Rng rng(spec.generation_seed);
    Matrix data = sample_gaussian(spec.n, spec.clean_mean, spec.cov, rng);
    EmbeddingSet clean(std::move(data));

    CorruptionSpec corruption;
    corruption.psi = spec.psi;
    corruption.mode = CorruptionMode::GaussianCluster;
    corruption.cluster_mean = spec.adversarial_mean;
    corruption.cluster_cov = spec.cov;
    corruption.seed = spec.corruption_seed;
    return inject(clean, corruption);
}

}  // namespace gmprune
