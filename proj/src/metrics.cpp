#include "gmprune/metrics.hpp"

#include "gmprune/corrupt.hpp"

#include <algorithm>
#include <cmath>

namespace gmprune {

namespace {

struct CleanStats {
    Index n_clean = 0;
    Index n_corrupt = 0;
    Vector clean_mean;
    double clean_sum_sq = 0.0;  // sum over clean rows of ||x - clean_mean||^2
};

CleanStats clean_stats(const EmbeddingSet& set) {
    const auto& flags = set.flags();  // throws MISSING_FLAGS
    CleanStats stats;
    stats.clean_mean = Vector::Zero(set.dim());
    for (Index i = 0; i < set.n(); ++i) {
        if (flags[static_cast<std::size_t>(i)] == Flag::Clean) {
            ++stats.n_clean;
            stats.clean_mean += set.data().row(i).transpose();
        } else {
            ++stats.n_corrupt;
        }
    }
    if (stats.n_clean <= stats.n_corrupt) {
        throw Error(ErrorCode::MajorityCorrupt,
                    "clean rows (" + std::to_string(stats.n_clean) +
                        ") do not outnumber corrupt rows (" + std::to_string(stats.n_corrupt) +
                        ")");
    }
    stats.clean_mean /= static_cast<double>(stats.n_clean);
    for (Index i = 0; i < set.n(); ++i) {
        if (flags[static_cast<std::size_t>(i)] == Flag::Clean) {
            stats.clean_sum_sq += (set.data().row(i).transpose() - stats.clean_mean).squaredNorm();
        }
    }
    return stats;
}

double bound_with_variance_term(const CleanStats& stats, double variance_term,
                                double epsilon_abs) {
    const double gap = static_cast<double>(stats.n_clean - stats.n_corrupt);
    return 8.0 * static_cast<double>(stats.n_clean) / (gap * gap) * variance_term +
           2.0 * epsilon_abs * epsilon_abs / (gap * gap);
}

}  // namespace

double subset_mean_error(const EmbeddingSet& set, const std::vector<Index>& indices,
                         const Vector& mu_g) {
    if (indices.empty()) {
        throw Error(ErrorCode::EmptySelection, "subset_mean_error: empty selection");
    }
    if (mu_g.size() != set.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "mu_g has wrong dimension");
    }
    Vector sum = Vector::Zero(set.dim());
    for (const Index i : indices) {
        if (i < 0 || i >= set.n()) {
            throw Error(ErrorCode::IndexOutOfRange, "selection index out of range");
        }
        sum += set.data().row(i).transpose();
    }
    return (sum / static_cast<double>(indices.size()) - mu_g).squaredNorm();
}

double theorem_bound(const EmbeddingSet& set, double epsilon_abs) {
    if (epsilon_abs < 0.0) {
        throw Error(ErrorCode::PreconditionViolated, "epsilon_abs must be >= 0");
    }
    const CleanStats stats = clean_stats(set);
    return bound_with_variance_term(stats, stats.clean_sum_sq, epsilon_abs);
}

double theorem_bound_normalized(const EmbeddingSet& set, double epsilon_abs) {
    if (epsilon_abs < 0.0) {
        throw Error(ErrorCode::PreconditionViolated, "epsilon_abs must be >= 0");
    }
    const CleanStats stats = clean_stats(set);
    return bound_with_variance_term(stats,
                                    stats.clean_sum_sq / static_cast<double>(stats.n_clean),
                                    epsilon_abs);
}

LoglogFit loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) {
        throw Error(ErrorCode::TooFewPoints,
                    "need >= 3 points, got " + std::to_string(points.size()));
    }
    double x_mean = 0.0;
    double y_mean = 0.0;
    for (const auto& [k, err] : points) {
        if (!(k >= 1.0)) {
            throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
        }
        if (!(err > 0.0)) {
            throw Error(ErrorCode::NonPositiveError, "errors must be > 0 for a log-log fit");
        }
        x_mean += std::log(k);
        y_mean += std::log(err);
    }
    const double count = static_cast<double>(points.size());
    x_mean /= count;
    y_mean /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto& [k, err] : points) {
        const double dx = std::log(k) - x_mean;
        const double dy = std::log(err) - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw Error(ErrorCode::PreconditionViolated, "k values are all identical");
    }
    LoglogFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;
    // residual variance after the fit; constant errors fit exactly
    fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - (syy - fit.slope * sxy) / syy;
    return fit;
}

double clean_precision(const std::vector<Index>& indices, const std::vector<Flag>& flags) {
    if (indices.empty()) {
        throw Error(ErrorCode::EmptySelection, "clean_precision: empty selection");
    }
    Index clean = 0;
    for (const Index i : indices) {
        if (i < 0 || i >= static_cast<Index>(flags.size())) {
            throw Error(ErrorCode::IndexOutOfRange, "selection index out of range");
        }
        if (flags[static_cast<std::size_t>(i)] == Flag::Clean) {
            ++clean;
        }
    }
    return static_cast<double>(clean) / static_cast<double>(indices.size());
}

std::vector<BreakdownCell> breakdown_sweep(const EmbeddingSet& set_clean,
                                           const std::vector<double>& psis,
                                           const std::vector<double>& magnitudes,
                                           const std::vector<Estimator>& estimators,
                                           std::uint64_t seed, const BreakdownConfig& cfg) {
    std::vector<BreakdownCell> table;
    table.reserve(psis.size() * magnitudes.size() * estimators.size());
    for (std::size_t pi = 0; pi < psis.size(); ++pi) {
        for (const double magnitude : magnitudes) {
            CorruptionSpec spec;
            spec.psi = psis[pi];
            spec.mode = CorruptionMode::PointAtMagnitude;
            spec.magnitude = magnitude;
            spec.seed = seed + pi;  // same rows replaced across magnitudes
            const EmbeddingSet corrupted = inject(set_clean, spec);

            GmConfig gm_cfg;
            const double scale = data_scale(corrupted);
            gm_cfg.step_tol = scale > 0.0 ? cfg.abs_step_tol / scale : cfg.abs_step_tol;
            gm_cfg.obj_tol = 0.0;
            gm_cfg.max_iters = cfg.max_iters;

            Vector mu_g = Vector::Zero(corrupted.dim());
            Index n_clean = 0;
            for (Index i = 0; i < corrupted.n(); ++i) {
                if (corrupted.flags()[static_cast<std::size_t>(i)] == Flag::Clean) {
                    mu_g += corrupted.data().row(i).transpose();
                    ++n_clean;
                }
            }
            mu_g /= static_cast<double>(n_clean);

            for (const Estimator estimator : estimators) {
                Vector estimate;
                if (estimator == Estimator::Mean) {
                    estimate = corrupted.data().colwise().mean().transpose();
                } else {
                    estimate = geometric_median(corrupted, gm_cfg).point;
                }
                table.push_back({psis[pi], magnitude, estimator, (estimate - mu_g).norm()});
            }
        }
    }
    std::sort(table.begin(), table.end(), [](const BreakdownCell& a, const BreakdownCell& b) {
        if (a.psi != b.psi) return a.psi < b.psi;
        if (a.magnitude != b.magnitude) return a.magnitude < b.magnitude;
        return static_cast<int>(a.estimator) < static_cast<int>(b.estimator);
    });
    return table;
}

}  // namespace gmprune
