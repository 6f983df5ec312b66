#pragma once

// Test-only brute-force minimizer of the Fermat-Weber objective: a coarse
// global grid over the (padded) bounding box followed by repeated shrinking
// around the incumbent. Convexity of the objective guarantees the incumbent
// cell contains the minimizer, so halving the box each round is safe.
// Independent of the production solver by construction.

#include "gmprune/gm.hpp"
#include "gmprune/types.hpp"

namespace test_oracle {

inline gmprune::Vector brute_force_gm(const gmprune::EmbeddingSet& set, int grid = 41,
                                      int rounds = 60) {
    using gmprune::Index;
    using gmprune::Vector;
    const Index d = set.dim();

    Vector lo = set.data().colwise().minCoeff().transpose();
    Vector hi = set.data().colwise().maxCoeff().transpose();
    const Vector pad = 0.05 * (hi - lo) + Vector::Constant(d, 1e-12);
    lo -= pad;
    hi += pad;

    Vector best = 0.5 * (lo + hi);
    double best_obj = gmprune::fermat_weber_objective(best, set);

    for (int round = 0; round < rounds; ++round) {
        Vector round_best = best;
        double round_obj = best_obj;
        Vector z(d);
        const int cells = grid - 1;
        if (d == 1) {
            for (int i = 0; i < grid; ++i) {
                z(0) = lo(0) + (hi(0) - lo(0)) * i / cells;
                const double obj = gmprune::fermat_weber_objective(z, set);
                if (obj < round_obj) {
                    round_obj = obj;
                    round_best = z;
                }
            }
        } else {
            for (int i = 0; i < grid; ++i) {
                z(0) = lo(0) + (hi(0) - lo(0)) * i / cells;
                for (int j = 0; j < grid; ++j) {
                    z(1) = lo(1) + (hi(1) - lo(1)) * j / cells;
                    const double obj = gmprune::fermat_weber_objective(z, set);
                    if (obj < round_obj) {
                        round_obj = obj;
                        round_best = z;
                    }
                }
            }
        }
        best = round_best;
        best_obj = round_obj;
        // shrink around the incumbent, keeping a few cells of slack
        const Vector half = 0.25 * (hi - lo);
        lo = best - half;
        hi = best + half;
    }
    return best;
}

}  // namespace test_oracle
