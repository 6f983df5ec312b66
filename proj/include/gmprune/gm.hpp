#pragma once

#include "gmprune/types.hpp"

#include <optional>

namespace gmprune {

enum class GmInit { CoordinateMedian, Mean, GivenPoint };

struct GmConfig {
    // Stop when the iterate moves less than step_tol * data_scale(set).
    double step_tol = 1e-10;
    // Stop when the relative objective decrease falls below obj_tol.
    // 0 disables this test; use it when far-away points inflate the objective
    // with a constant term that hides small decreases in double precision.
    double obj_tol = 1e-12;
    int max_iters = 10'000;
    GmInit init = GmInit::CoordinateMedian;
    Vector given_point;  // used when init == GivenPoint
    // Radius below which an iterate counts as coincident with a data row.
    // 0 means auto: 1e-12 * data_scale(set).
    double anchor_eps = 0.0;
};

struct GmResult {
    Vector point;
    double objective = 0.0;
    int iters = 0;
    bool converged = false;
    double final_step = 0.0;
    // Norm of the subgradient surrogate at the solution: ||sum of unit
    // vectors toward non-coincident rows|| minus the coincident multiplicity,
    // clamped at zero.
    double grad_norm = 0.0;
};

/// Fermat-Weber objective: sum of Euclidean distances from z to every row.
double fermat_weber_objective(const Vector& z, const EmbeddingSet& set);

/// One Weiszfeld update. Away from data rows this is the classical
/// weighted-average step; within anchor_eps of a row it applies the
/// Vardi-Zhang modified step, which either certifies the row as optimal
/// (returned unchanged) or moves off it in a descent direction.
Vector weiszfeld_step(const Vector& z, const EmbeddingSet& set, double anchor_eps);

/// Per-column lower median (for even counts, the lower of the two middle
/// order statistics).
Vector coordinate_median(const EmbeddingSet& set);

/// Iterate weiszfeld_step until the movement or objective-decrease tolerance
/// triggers, a data row is certified optimal, or max_iters is reached
/// (converged = false, best iterate still returned).
GmResult geometric_median(const EmbeddingSet& set, const GmConfig& cfg = {});

/// Accuracy estimate against a higher-budget reference run of the same
/// instance: objective / reference_objective - 1. An estimate, not a bound;
/// meaningful only when the reference is (near) optimal.
double epsilon_estimate(const GmResult& result, const EmbeddingSet& set,
                        double reference_objective);

/// Largest r such that the ball of radius r around `point` lies inside the
/// convex hull of the rows. Diagnostic, d = 2 only; nullopt for other d or
/// when the point lies outside the hull.
std::optional<double> interiority_radius(const EmbeddingSet& set, const Vector& point);

}  // namespace gmprune
