#pragma once

#include "gmprune/gm.hpp"
#include "gmprune/types.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace gmprune {

enum class SelectMethod { GmMatch, MeanHerd, Random, Easy, Hard, Moderate };
enum class Replacement { Without, With };

// Initial accumulator for the herding methods. GmPoint means the method's
// matching target: the geometric median for gm-match, the empirical mean for
// mean-herd.
enum class Theta0Mode { GmPoint, Zero, Given };

struct SelectorConfig {
    SelectMethod method = SelectMethod::GmMatch;
    Index k = 1;
    Replacement replacement = Replacement::Without;
    Theta0Mode theta0 = Theta0Mode::GmPoint;
    Vector theta0_vector;  // used when theta0 == Given
    bool group_by_labels = false;
    std::uint64_t seed = 0;  // consumed by Random only
    bool normalize = false;  // L2-normalize rows before selection
};

struct GroupTrace {
    std::uint32_t label = 0;
    Index quota = 0;
    Vector target;
};

struct SelectionResult {
    SelectMethod method = SelectMethod::GmMatch;
    Index k = 0;
    std::vector<Index> indices;  // selection order; grouped: (group, step) order
    // The matched moment. Grouped runs store the quota-weighted average of the
    // per-group targets here and the individual targets in `groups`.
    Vector target;
    // ||theta_t|| for t = 0..k (herding methods only; grouped: concatenated).
    std::vector<double> theta_norm_trace;
    // ||target - mean(first t selections)|| for t = 1..k.
    std::vector<double> residual_trace;
    std::vector<GroupTrace> groups;  // grouped runs only
};

/// Greedy moment matching toward the geometric median (x_{t+1} maximizes
/// <theta_t, x>; theta accumulates target-minus-selected discrepancies).
/// `gm` must have been computed on `set` as passed here (post-normalization
/// when the caller normalizes).
SelectionResult gm_matching(const EmbeddingSet& set, const GmResult& gm,
                            const SelectorConfig& cfg);

/// Same greedy loop with the empirical mean as target (classical herding).
SelectionResult mean_herding(const EmbeddingSet& set, const SelectorConfig& cfg);

/// Uniform sample of k distinct rows from the seeded Rng. The residual trace
/// is reported against the empirical mean; no theta trace.
SelectionResult random_select(const EmbeddingSet& set, const SelectorConfig& cfg);

/// Squared Euclidean distance of every row to the centroid.
std::vector<double> distance_scores(const EmbeddingSet& set, const Vector& centroid);

/// Pick k indices by score: Easy = smallest, Hard = largest, Moderate =
/// closest to the median distance (distance = sqrt(score)). Ties break
/// toward the lower index.
std::vector<Index> score_select(const std::vector<double>& scores, Index k, SelectMethod mode);

/// Run `inner` once per label group with quotas allocated to groups by
/// largest remainder, proportional to group size. Indices come back in
/// (group, step) order; groups are visited in ascending label order.
SelectionResult per_group_select(
    const EmbeddingSet& set, const SelectorConfig& cfg,
    const std::function<SelectionResult(const EmbeddingSet&, const SelectorConfig&)>& inner);

/// Row-normalized copy (zero rows are kept as-is). Labels and flags carry
/// through.
EmbeddingSet l2_normalized(const EmbeddingSet& set);

/// Full dispatch: applies normalization, grouping, and the method. For
/// gm-match an externally computed GmResult may be supplied (ungrouped runs
/// only); otherwise the GM is solved with `gm_cfg`, per group when grouped.
SelectionResult run_selector(const EmbeddingSet& set, const SelectorConfig& cfg,
                             const GmConfig& gm_cfg = {},
                             const GmResult* precomputed_gm = nullptr);

}  // namespace gmprune
