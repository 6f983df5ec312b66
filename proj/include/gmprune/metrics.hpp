#pragma once

#include "gmprune/gm.hpp"
#include "gmprune/types.hpp"

#include <vector>

namespace gmprune {

struct LoglogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

enum class Estimator { Mean, Gm };

struct BreakdownCell {
    double psi = 0.0;
    double magnitude = 0.0;
    Estimator estimator = Estimator::Mean;
    double error = 0.0;  // ||estimate - clean mean||
};

/// ||mean(selected rows) - mu_g||^2.
double subset_mean_error(const EmbeddingSet& set, const std::vector<Index>& indices,
                         const Vector& mu_g);

/// The convergence bound evaluated exactly as printed:
///   8 |G| / (|G|-|B|)^2 * sum_{x in G} ||x - mu_G||^2  +  2 eps^2 / (|G|-|B|)^2
/// with mu_G the empirical mean of CLEAN rows and eps an absolute
/// objective gap. Requires flags and a clean majority.
double theorem_bound(const EmbeddingSet& set, double epsilon_abs);

/// Diagnostic variant with the variance term divided by |G| (per-sample
/// variance instead of the printed sum).
double theorem_bound_normalized(const EmbeddingSet& set, double epsilon_abs);

/// Ordinary least squares on (ln k, ln error). Needs >= 3 points, errors > 0.
LoglogFit loglog_slope(const std::vector<std::pair<double, double>>& points);

/// Fraction of selected rows flagged CLEAN, duplicates counted with
/// multiplicity.
double clean_precision(const std::vector<Index>& indices, const std::vector<Flag>& flags);

struct BreakdownConfig {
    // Absolute iterate-movement tolerance for the GM solves. The solver's
    // scale-relative step_tol is derived per cell so the stopping precision
    // does not degrade when the corrupt magnitude dominates the data range.
    // The objective-decrease test is disabled: with corrupt mass at 1e9 the
    // objective carries a constant too large for double precision to resolve
    // the decreases that matter.
    double abs_step_tol = 1e-10;
    int max_iters = 200'000;
};

/// For each (psi, magnitude): replace floor(psi*n) rows of the clean set with
/// magnitude * e_1 and record ||estimate - clean mean|| for the requested
/// estimators. The same rows are replaced for every magnitude at a given psi
/// (the row draw is seeded per psi), so the mean error is an exact linear
/// function of the magnitude. Rows come back sorted by (psi, magnitude,
/// estimator).
std::vector<BreakdownCell> breakdown_sweep(const EmbeddingSet& set_clean,
                                           const std::vector<double>& psis,
                                           const std::vector<double>& magnitudes,
                                           const std::vector<Estimator>& estimators,
                                           std::uint64_t seed, const BreakdownConfig& cfg = {});

}  // namespace gmprune
