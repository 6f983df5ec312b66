#include "gmprune/corrupt.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>

namespace gmprune {

namespace {

// floor(psi * n) with a small absolute slack so decimal fractions typed as
// doubles (0.35 * 100 -> 34.9999...) land on the intended integer.
Index corrupt_count(double psi, Index n) {
    return static_cast<Index>(std::floor(psi * static_cast<double>(n) + 1e-9));
}

void check_psi(double psi) {
    if (!(psi >= 0.0 && psi < 0.5)) {
        throw Error(ErrorCode::PsiOutOfRange,
                    "psi must lie in [0, 0.5), got " + std::to_string(psi));
    }
}

Eigen::LLT<Eigen::MatrixXd> cholesky_or_throw(const Matrix& cov, Index d) {
    if (cov.rows() != d || cov.cols() != d) {
        throw Error(ErrorCode::DimensionMismatch, "covariance must be d x d");
    }
    if (!cov.isApprox(cov.transpose())) {
        throw Error(ErrorCode::CovNotSpd, "covariance is not symmetric");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorCode::CovNotSpd, "covariance is not positive definite");
    }
    return llt;
}

}  // namespace

double alpha_from_psi(double psi) {
    check_psi(psi);
    return psi / (1.0 - psi);
}

Matrix sample_gaussian(Index n, const Vector& mean, const Matrix& cov, Rng& rng) {
    const Index d = mean.size();
    const auto llt = cholesky_or_throw(cov, d);
    const Eigen::MatrixXd chol = llt.matrixL();
    Matrix out(n, d);
    Vector g(d);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < d; ++j) {
            g(j) = rng.normal();
        }
        out.row(i) = (mean + chol * g).transpose();
    }
    return out;
}

EmbeddingSet inject(const EmbeddingSet& set, const CorruptionSpec& spec) {
    check_psi(spec.psi);
    if (set.has_flags()) {
        for (const Flag flag : set.flags()) {
            if (flag != Flag::Clean) {
                throw Error(ErrorCode::PreconditionViolated,
                            "inject expects a clean set (no CORRUPT flags)");
            }
        }
    }
    const Index n = set.n();
    const Index d = set.dim();
    const Index m = corrupt_count(spec.psi, n);

    Rng rng(spec.seed);
    auto picked = rng.sample_without_replacement(static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(m));
    std::sort(picked.begin(), picked.end());

    Matrix data = set.data();
    std::optional<std::vector<std::uint32_t>> labels;
    if (set.has_labels()) {
        labels = set.labels();
    }
    std::vector<Flag> flags(static_cast<std::size_t>(n), Flag::Clean);

    switch (spec.mode) {
        case CorruptionMode::GaussianCluster: {
            if (spec.cluster_mean.size() != d) {
                throw Error(ErrorCode::DimensionMismatch, "cluster mean has wrong dimension");
            }
            const auto llt = cholesky_or_throw(spec.cluster_cov, d);
            const Eigen::MatrixXd chol = llt.matrixL();
            Vector g(d);
            for (const auto row : picked) {
                for (Index j = 0; j < d; ++j) {
                    g(j) = rng.normal();
                }
                data.row(static_cast<Index>(row)) = (spec.cluster_mean + chol * g).transpose();
            }
            break;
        }
        case CorruptionMode::PointAtMagnitude: {
            Vector point = Vector::Zero(d);
            point(0) = spec.magnitude;
            for (const auto row : picked) {
                data.row(static_cast<Index>(row)) = point.transpose();
            }
            break;
        }
        case CorruptionMode::MeanHijack: {
            if (spec.target.size() != d) {
                throw Error(ErrorCode::DimensionMismatch, "hijack target has wrong dimension");
            }
            if (m > 0) {
                Vector kept_sum = Vector::Zero(d);
                std::vector<char> is_picked(static_cast<std::size_t>(n), 0);
                for (const auto row : picked) {
                    is_picked[static_cast<std::size_t>(row)] = 1;
                }
                for (Index i = 0; i < n; ++i) {
                    if (!is_picked[static_cast<std::size_t>(i)]) {
                        kept_sum += set.data().row(i).transpose();
                    }
                }
                // place all replaced rows on the one point that moves the
                // full-set mean onto the target
                const Vector point =
                    (static_cast<double>(n) * spec.target - kept_sum) / static_cast<double>(m);
                for (const auto row : picked) {
                    data.row(static_cast<Index>(row)) = point.transpose();
                }
            }
            break;
        }
        case CorruptionMode::LabelFlip: {
            if (!labels) {
                throw Error(ErrorCode::MissingLabels, "label flip requires labels");
            }
            std::uint32_t num_classes = spec.num_classes;
            if (num_classes == 0) {
                for (const std::uint32_t label : *labels) {
                    num_classes = std::max(num_classes, label + 1);
                }
            }
            if (num_classes < 2) {
                throw Error(ErrorCode::PreconditionViolated,
                            "label flip needs at least two classes");
            }
            for (const std::uint32_t label : *labels) {
                if (label >= num_classes) {
                    throw Error(ErrorCode::InvalidLabel,
                                "label " + std::to_string(label) + " >= num_classes");
                }
            }
            for (const auto row : picked) {
                std::uint32_t& label = (*labels)[static_cast<std::size_t>(row)];
                // uniform over the other classes
                const auto r = static_cast<std::uint32_t>(rng.uniform_index(num_classes - 1));
                label = r >= label ? r + 1 : r;
            }
            break;
        }
    }

    for (const auto row : picked) {
        flags[static_cast<std::size_t>(row)] = Flag::Corrupt;
    }
    return EmbeddingSet(std::move(data), std::move(labels), std::move(flags));
}

Vector mean_hijack_point(const EmbeddingSet& set, const Vector& target) {
    if (target.size() != set.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "target has wrong dimension");
    }
    const Vector row_sum = set.data().colwise().sum().transpose();
    return static_cast<double>(set.n() + 1) * target - row_sum;
}

double score_deviation(const Vector& x, const Vector& mu_g, const Vector& delta_mu) {
    if (x.size() != mu_g.size() || x.size() != delta_mu.size()) {
        throw Error(ErrorCode::DimensionMismatch, "score_deviation dimensions disagree");
    }
    return delta_mu.squaredNorm() - 2.0 * (x - mu_g).dot(delta_mu);
}

}  // namespace gmprune
