#include "gmprune/gm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gmprune {

namespace {

void check_point(const Vector& z, const EmbeddingSet& set) {
    if (z.size() != set.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "point has dimension " + std::to_string(z.size()) + ", set has " +
                        std::to_string(set.dim()));
    }
    if (!z.allFinite()) {
        throw Error(ErrorCode::NonFiniteValue, "point must be finite");
    }
}

struct StepOutcome {
    Vector z_new;
    bool certified;  // z coincides with a data row and satisfies the optimality test
};

// One Weiszfeld / Vardi-Zhang update. `dists` are the distances from z to
// every row, precomputed by the caller.
StepOutcome take_step(const Vector& z, const Matrix& data, const Vector& dists,
                      double anchor_eps) {
    const Index n = data.rows();
    const Index d = data.cols();

    Index coincident = 0;
    double weight_sum = 0.0;
    Vector weighted_avg_num = Vector::Zero(d);
    Vector pull = Vector::Zero(d);  // sum of (x_i - z) / ||x_i - z|| over non-coincident rows
    for (Index i = 0; i < n; ++i) {
        if (dists(i) < anchor_eps) {
            ++coincident;
            continue;
        }
        const double w = 1.0 / dists(i);
        weight_sum += w;
        weighted_avg_num += w * data.row(i).transpose();
        pull += w * (data.row(i).transpose() - z);
    }

    if (coincident == n) {
        return {z, true};
    }
    if (coincident > 0) {
        const double eta = static_cast<double>(coincident);
        const double R = pull.norm();
        if (R <= eta) {
            return {z, true};
        }
        const Vector t = weighted_avg_num / weight_sum;
        return {(1.0 - eta / R) * t + (eta / R) * z, false};
    }
    return {weighted_avg_num / weight_sum, false};
}

double resolve_anchor_eps(double configured, double scale) {
    if (configured > 0.0) {
        return configured;
    }
    return scale > 0.0 ? 1e-12 * scale : 1e-300;
}

}  // namespace

double fermat_weber_objective(const Vector& z, const EmbeddingSet& set) {
    check_point(z, set);
    double total = 0.0;
    for (Index i = 0; i < set.n(); ++i) {
        total += (set.data().row(i).transpose() - z).norm();
    }
    return total;
}

Vector weiszfeld_step(const Vector& z, const EmbeddingSet& set, double anchor_eps) {
    check_point(z, set);
    Vector dists(set.n());
    for (Index i = 0; i < set.n(); ++i) {
        dists(i) = (set.data().row(i).transpose() - z).norm();
    }
    return take_step(z, set.data(), dists, anchor_eps).z_new;
}

Vector coordinate_median(const EmbeddingSet& set) {
    const Index n = set.n();
    Vector med(set.dim());
    std::vector<double> col(static_cast<std::size_t>(n));
    for (Index c = 0; c < set.dim(); ++c) {
        for (Index r = 0; r < n; ++r) {
            col[static_cast<std::size_t>(r)] = set.data()(r, c);
        }
        const auto mid = col.begin() + static_cast<std::ptrdiff_t>((n - 1) / 2);
        std::nth_element(col.begin(), mid, col.end());
        med(c) = *mid;  // lower median
    }
    return med;
}

GmResult geometric_median(const EmbeddingSet& set, const GmConfig& cfg) {
    if (cfg.step_tol <= 0.0 || cfg.obj_tol < 0.0 || cfg.max_iters < 1) {
        throw Error(ErrorCode::PreconditionViolated, "invalid GmConfig tolerances");
    }
    const double scale = data_scale(set);
    const double anchor_eps = resolve_anchor_eps(cfg.anchor_eps, scale);
    const double step_threshold = cfg.step_tol * scale;

    Vector z;
    switch (cfg.init) {
        case GmInit::CoordinateMedian: z = coordinate_median(set); break;
        case GmInit::Mean: z = set.data().colwise().mean().transpose(); break;
        case GmInit::GivenPoint:
            check_point(cfg.given_point, set);
            z = cfg.given_point;
            break;
    }

    GmResult result;
    Vector dists(set.n());
    double obj_prev = fermat_weber_objective(z, set);
    for (int it = 0; it < cfg.max_iters; ++it) {
        for (Index i = 0; i < set.n(); ++i) {
            dists(i) = (set.data().row(i).transpose() - z).norm();
        }
        const StepOutcome out = take_step(z, set.data(), dists, anchor_eps);
        result.iters = it + 1;
        result.final_step = (out.z_new - z).norm();
        z = out.z_new;
        if (out.certified) {
            result.converged = true;
            break;
        }
        if (result.final_step <= step_threshold) {
            result.converged = true;
            break;
        }
        const double obj_new = fermat_weber_objective(z, set);
        if (cfg.obj_tol > 0.0 && obj_prev - obj_new <= cfg.obj_tol * obj_prev) {
            result.converged = true;
            break;
        }
        obj_prev = obj_new;
    }

    result.point = z;
    result.objective = fermat_weber_objective(z, set);

    // subgradient surrogate at the solution
    Index coincident = 0;
    Vector pull = Vector::Zero(set.dim());
    for (Index i = 0; i < set.n(); ++i) {
        const Vector diff = set.data().row(i).transpose() - z;
        const double dist = diff.norm();
        if (dist < anchor_eps) {
            ++coincident;
        } else {
            pull += diff / dist;
        }
    }
    result.grad_norm = std::max(pull.norm() - static_cast<double>(coincident), 0.0);
    return result;
}

double epsilon_estimate(const GmResult& result, const EmbeddingSet& set,
                        double reference_objective) {
    if (!(reference_objective > 0.0)) {
        throw Error(ErrorCode::NonPositiveReference,
                    "reference objective must be > 0, got " + std::to_string(reference_objective));
    }
    return fermat_weber_objective(result.point, set) / reference_objective - 1.0;
}

std::optional<double> interiority_radius(const EmbeddingSet& set, const Vector& point) {
    if (set.dim() != 2 || point.size() != 2) {
        return std::nullopt;
    }
    using P = std::pair<double, double>;
    std::vector<P> pts(static_cast<std::size_t>(set.n()));
    for (Index i = 0; i < set.n(); ++i) {
        pts[static_cast<std::size_t>(i)] = {set.data()(i, 0), set.data()(i, 1)};
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const auto cross = [](const P& o, const P& a, const P& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };

    // Andrew monotone chain, counterclockwise hull
    std::vector<P> hull;
    if (pts.size() < 3) {
        hull = pts;
    } else {
        hull.resize(2 * pts.size());
        std::size_t k = 0;
        for (const P& p : pts) {
            while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
            hull[k++] = p;
        }
        const std::size_t lower = k + 1;
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
            hull[k++] = *it;
        }
        hull.resize(k - 1);
    }

    const P q{point(0), point(1)};
    if (hull.size() == 1) {
        return (q == hull[0]) ? std::optional<double>(0.0) : std::nullopt;
    }
    if (hull.size() == 2) {
        // degenerate hull: a segment; the point must lie on it
        const double cr = cross(hull[0], hull[1], q);
        const double dot = (q.first - hull[0].first) * (hull[1].first - hull[0].first) +
                           (q.second - hull[0].second) * (hull[1].second - hull[0].second);
        const double len2 = (hull[1].first - hull[0].first) * (hull[1].first - hull[0].first) +
                            (hull[1].second - hull[0].second) * (hull[1].second - hull[0].second);
        if (std::abs(cr) < 1e-12 && dot >= 0.0 && dot <= len2) {
            return 0.0;
        }
        return std::nullopt;
    }
    double radius = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const P& a = hull[i];
        const P& b = hull[(i + 1) % hull.size()];
        const double len = std::hypot(b.first - a.first, b.second - a.second);
        const double signed_dist = cross(a, b, q) / len;  // >= 0 inside a CCW hull
        if (signed_dist < 0.0) {
            return std::nullopt;
        }
        radius = std::min(radius, signed_dist);
    }
    return radius;
}

}  // namespace gmprune
