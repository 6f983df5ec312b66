#include "gmprune/select.hpp"

#include "gmprune/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace gmprune {

namespace {

void check_k(const EmbeddingSet& set, const SelectorConfig& cfg) {
    if (cfg.k < 1) {
        throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
    }
    if (cfg.replacement == Replacement::Without && cfg.k > set.n()) {
        throw Error(ErrorCode::KTooLarge,
                    "k = " + std::to_string(cfg.k) + " exceeds n = " + std::to_string(set.n()));
    }
}

Vector initial_theta(const Vector& target, const SelectorConfig& cfg, Index d) {
    switch (cfg.theta0) {
        case Theta0Mode::GmPoint: return target;
        case Theta0Mode::Zero: return Vector::Zero(d);
        case Theta0Mode::Given:
            if (cfg.theta0_vector.size() != d) {
                throw Error(ErrorCode::DimensionMismatch, "theta0 vector has wrong dimension");
            }
            return cfg.theta0_vector;
    }
    return target;
}

SelectionResult herd(const EmbeddingSet& set, const Vector& target, const SelectorConfig& cfg,
                     SelectMethod method) {
    check_k(set, cfg);
    if (target.size() != set.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "target has wrong dimension");
    }
    const Index n = set.n();
    const bool with_replacement = cfg.replacement == Replacement::With;

    SelectionResult result;
    result.method = method;
    result.k = cfg.k;
    result.target = target;
    result.indices.reserve(static_cast<std::size_t>(cfg.k));
    result.theta_norm_trace.reserve(static_cast<std::size_t>(cfg.k) + 1);
    result.residual_trace.reserve(static_cast<std::size_t>(cfg.k));

    Vector theta = initial_theta(target, cfg, set.dim());
    result.theta_norm_trace.push_back(theta.norm());

    std::vector<char> available(static_cast<std::size_t>(n), 1);
    Vector running_sum = Vector::Zero(set.dim());
    Vector scores(n);
    for (Index t = 1; t <= cfg.k; ++t) {
        scores.noalias() = set.data() * theta;
        Index best = -1;
        double best_score = -std::numeric_limits<double>::infinity();
        for (Index i = 0; i < n; ++i) {
            if (!with_replacement && !available[static_cast<std::size_t>(i)]) {
                continue;
            }
            // strict > keeps the lowest index among exact ties
            if (best < 0 || scores(i) > best_score) {
                best = i;
                best_score = scores(i);
            }
        }
        const Vector x = set.data().row(best).transpose();
        result.indices.push_back(best);
        if (!with_replacement) {
            available[static_cast<std::size_t>(best)] = 0;
        }
        theta += target - x;
        running_sum += x;
        result.theta_norm_trace.push_back(theta.norm());
        result.residual_trace.push_back((target - running_sum / static_cast<double>(t)).norm());
    }
    return result;
}

Vector empirical_mean(const EmbeddingSet& set) {
    return set.data().colwise().mean().transpose();
}

// Residual-only trace for methods that do not herd (random, score-based).
std::vector<double> residuals_against(const EmbeddingSet& set, const std::vector<Index>& indices,
                                      const Vector& reference) {
    std::vector<double> out;
    out.reserve(indices.size());
    Vector running_sum = Vector::Zero(set.dim());
    Index t = 0;
    for (const Index i : indices) {
        running_sum += set.data().row(i).transpose();
        ++t;
        out.push_back((reference - running_sum / static_cast<double>(t)).norm());
    }
    return out;
}

double lower_median(std::vector<double> values) {
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

}  // namespace

SelectionResult gm_matching(const EmbeddingSet& set, const GmResult& gm,
                            const SelectorConfig& cfg) {
    return herd(set, gm.point, cfg, SelectMethod::GmMatch);
}

SelectionResult mean_herding(const EmbeddingSet& set, const SelectorConfig& cfg) {
    return herd(set, empirical_mean(set), cfg, SelectMethod::MeanHerd);
}

SelectionResult random_select(const EmbeddingSet& set, const SelectorConfig& cfg) {
    if (cfg.k < 1) {
        throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
    }
    if (cfg.k > set.n()) {
        throw Error(ErrorCode::KTooLarge,
                    "k = " + std::to_string(cfg.k) + " exceeds n = " + std::to_string(set.n()));
    }
    Rng rng(cfg.seed);
    const auto picks =
        rng.sample_without_replacement(static_cast<std::uint64_t>(set.n()),
                                       static_cast<std::uint64_t>(cfg.k));
    SelectionResult result;
    result.method = SelectMethod::Random;
    result.k = cfg.k;
    result.indices.reserve(picks.size());
    for (const auto p : picks) {
        result.indices.push_back(static_cast<Index>(p));
    }
    result.target = empirical_mean(set);
    result.residual_trace = residuals_against(set, result.indices, result.target);
    return result;
}

std::vector<double> distance_scores(const EmbeddingSet& set, const Vector& centroid) {
    if (centroid.size() != set.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "centroid has wrong dimension");
    }
    std::vector<double> scores(static_cast<std::size_t>(set.n()));
    for (Index i = 0; i < set.n(); ++i) {
        scores[static_cast<std::size_t>(i)] =
            (set.data().row(i).transpose() - centroid).squaredNorm();
    }
    return scores;
}

std::vector<Index> score_select(const std::vector<double>& scores, Index k, SelectMethod mode) {
    const Index n = static_cast<Index>(scores.size());
    if (k < 1) {
        throw Error(ErrorCode::PreconditionViolated, "k must be >= 1");
    }
    if (k > n) {
        throw Error(ErrorCode::KTooLarge,
                    "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});

    std::vector<double> key(scores);
    bool descending = false;
    switch (mode) {
        case SelectMethod::Easy:
            break;
        case SelectMethod::Hard:
            descending = true;
            break;
        case SelectMethod::Moderate: {
            std::vector<double> dist(scores.size());
            for (std::size_t i = 0; i < scores.size(); ++i) {
                dist[i] = std::sqrt(scores[i]);
            }
            const double med = lower_median(dist);
            for (std::size_t i = 0; i < scores.size(); ++i) {
                key[i] = std::abs(dist[i] - med);
            }
            break;
        }
        default:
            throw Error(ErrorCode::PreconditionViolated, "score_select mode must be a score method");
    }
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        const double ka = key[static_cast<std::size_t>(a)];
        const double kb = key[static_cast<std::size_t>(b)];
        if (ka != kb) {
            return descending ? ka > kb : ka < kb;
        }
        return a < b;
    });
    order.resize(static_cast<std::size_t>(k));
    return order;
}

SelectionResult per_group_select(
    const EmbeddingSet& set, const SelectorConfig& cfg,
    const std::function<SelectionResult(const EmbeddingSet&, const SelectorConfig&)>& inner) {
    if (!set.has_labels()) {
        throw Error(ErrorCode::MissingLabels, "grouped selection requires labels");
    }
    if (!cfg.group_by_labels) {
        throw Error(ErrorCode::PreconditionViolated, "per_group_select requires group_by_labels");
    }
    check_k(set, cfg);

    std::map<std::uint32_t, std::vector<Index>> groups;
    for (Index i = 0; i < set.n(); ++i) {
        groups[set.labels()[static_cast<std::size_t>(i)]].push_back(i);
    }

    // Largest-remainder quotas, integer arithmetic throughout: base share
    // floor(k*n_g/n), leftovers to the largest remainders, ties to the lower
    // label.
    struct Share {
        std::uint32_t label;
        Index size;
        Index quota;
        Index remainder;
    };
    std::vector<Share> shares;
    shares.reserve(groups.size());
    Index assigned = 0;
    for (const auto& [label, rows] : groups) {
        const Index size = static_cast<Index>(rows.size());
        const Index base = cfg.k * size / set.n();
        shares.push_back({label, size, base, cfg.k * size - base * set.n()});
        assigned += base;
    }
    Index leftover = cfg.k - assigned;
    std::vector<std::size_t> by_remainder(shares.size());
    std::iota(by_remainder.begin(), by_remainder.end(), std::size_t{0});
    std::sort(by_remainder.begin(), by_remainder.end(), [&](std::size_t a, std::size_t b) {
        if (shares[a].remainder != shares[b].remainder) {
            return shares[a].remainder > shares[b].remainder;
        }
        return shares[a].label < shares[b].label;
    });
    for (std::size_t i = 0; i < by_remainder.size() && leftover > 0; ++i, --leftover) {
        ++shares[by_remainder[i]].quota;
    }

    SelectionResult result;
    result.method = cfg.method;
    result.k = cfg.k;
    result.target = Vector::Zero(set.dim());
    for (const Share& share : shares) {
        if (share.quota == 0) {
            continue;
        }
        if (cfg.replacement == Replacement::Without && share.quota > share.size) {
            throw Error(ErrorCode::GroupSmallerThanQuota,
                        "group " + std::to_string(share.label) + " has " +
                            std::to_string(share.size) + " rows, quota " +
                            std::to_string(share.quota));
        }
        const std::vector<Index>& rows = groups.at(share.label);
        const EmbeddingSet subgroup = subset_rows(set, rows);
        SelectorConfig sub_cfg = cfg;
        sub_cfg.k = share.quota;
        sub_cfg.group_by_labels = false;
        sub_cfg.seed = cfg.seed + share.label;  // decorrelate per-group draws
        SelectionResult sub = inner(subgroup, sub_cfg);
        for (const Index local : sub.indices) {
            result.indices.push_back(rows[static_cast<std::size_t>(local)]);
        }
        result.theta_norm_trace.insert(result.theta_norm_trace.end(),
                                       sub.theta_norm_trace.begin(), sub.theta_norm_trace.end());
        result.residual_trace.insert(result.residual_trace.end(), sub.residual_trace.begin(),
                                     sub.residual_trace.end());
        result.target += static_cast<double>(share.quota) * sub.target;
        result.groups.push_back({share.label, share.quota, sub.target});
    }
    result.target /= static_cast<double>(cfg.k);
    return result;
}

EmbeddingSet l2_normalized(const EmbeddingSet& set) {
    Matrix data = set.data();
    for (Index i = 0; i < data.rows(); ++i) {
        const double norm = data.row(i).norm();
        if (norm > 0.0) {
            data.row(i) /= norm;
        }
    }
    std::optional<std::vector<std::uint32_t>> labels;
    if (set.has_labels()) {
        labels = set.labels();
    }
    std::optional<std::vector<Flag>> flags;
    if (set.has_flags()) {
        flags = set.flags();
    }
    return EmbeddingSet(std::move(data), std::move(labels), std::move(flags));
}

SelectionResult run_selector(const EmbeddingSet& set, const SelectorConfig& cfg,
                             const GmConfig& gm_cfg, const GmResult* precomputed_gm) {
    const EmbeddingSet* active = &set;
    std::optional<EmbeddingSet> normalized;
    if (cfg.normalize) {
        normalized = l2_normalized(set);
        active = &*normalized;
    }

    const auto dispatch = [&gm_cfg](const EmbeddingSet& s, const SelectorConfig& c,
                                    const GmResult* gm) -> SelectionResult {
        switch (c.method) {
            case SelectMethod::GmMatch: {
                if (gm != nullptr) {
                    return gm_matching(s, *gm, c);
                }
                const GmResult solved = geometric_median(s, gm_cfg);
                return gm_matching(s, solved, c);
            }
            case SelectMethod::MeanHerd:
                return mean_herding(s, c);
            case SelectMethod::Random:
                return random_select(s, c);
            case SelectMethod::Easy:
            case SelectMethod::Hard:
            case SelectMethod::Moderate: {
                const Vector centroid = s.data().colwise().mean().transpose();
                SelectionResult result;
                result.method = c.method;
                result.k = c.k;
                result.indices = score_select(distance_scores(s, centroid), c.k, c.method);
                result.target = centroid;
                result.residual_trace = residuals_against(s, result.indices, centroid);
                return result;
            }
        }
        throw Error(ErrorCode::PreconditionViolated, "unknown method");
    };

    if (cfg.group_by_labels) {
        return per_group_select(*active, cfg,
                                [&](const EmbeddingSet& s, const SelectorConfig& c) {
                                    return dispatch(s, c, nullptr);  // GM recomputed per group
                                });
    }
    return dispatch(*active, cfg, precomputed_gm);
}

}  // namespace gmprune
