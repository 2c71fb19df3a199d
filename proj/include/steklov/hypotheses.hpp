#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "steklov/manifold.hpp"

namespace steklov {

// Curvature-sign and convexity flags sampled on a radial grid.
struct HypothesisReport {
    bool ricci_nonneg;
    bool ricci_nonpos;
    bool convex_boundary;
    bool lemma1_holds;   // h'' <= 0 and 0 < h' <= 1 throughout
    double worst_margin; // most negative slack seen across all checks
};

// Ricci components of dr^2 + h^2 g_S: radial -(n-1) h''/h, and tangential
// -h''/h + (n-2)(1-h'^2)/h^2. Signs are decided by h''/h alone for n = 2
// and by both quotients for n >= 3, each sampled with tolerance 1e-10.
inline HypothesisReport check_hypotheses(const ManifoldSpec& man, int grid_size = 256) {
    if (grid_size < 16) throw domain_error("check_hypotheses: grid_size must be >= 16");
    const double tol = 1e-10;
    HypothesisReport rep{true, true, false, true, std::numeric_limits<double>::infinity()};
    for (int i = 1; i <= grid_size; ++i) {
        const double r = man.R * i / grid_size;
        const WarpDerivs d = man.warp.eval(r);
        const double radial_q = -d.h2 / d.h;
        rep.ricci_nonneg = rep.ricci_nonneg && radial_q >= -tol;
        rep.ricci_nonpos = rep.ricci_nonpos && radial_q <= tol;
        rep.worst_margin = std::min(rep.worst_margin, radial_q);
        if (man.n >= 3) {
            const double tangential_q = (1.0 - d.h1 * d.h1) / (d.h * d.h);
            rep.ricci_nonneg = rep.ricci_nonneg && tangential_q >= -tol;
            rep.ricci_nonpos = rep.ricci_nonpos && tangential_q <= tol;
            rep.worst_margin = std::min(rep.worst_margin, tangential_q);
        }
        rep.lemma1_holds = rep.lemma1_holds && d.h2 <= tol && d.h1 > tol && d.h1 <= 1.0 + tol;
        rep.worst_margin = std::min({rep.worst_margin, -d.h2, d.h1, 1.0 - d.h1});
    }
    const double h1_boundary = man.warp.eval(man.R).h1;
    rep.convex_boundary = h1_boundary > 0.0;
    rep.worst_margin = std::min(rep.worst_margin, h1_boundary);
    return rep;
}

// Largest |h' - 1| on the grid; zero only for the Euclidean cone metric.
inline double max_deviation_from_flat(const ManifoldSpec& man, int grid_size = 256) {
    double dev = 0.0;
    for (int i = 1; i <= grid_size; ++i) {
        const double r = man.R * i / grid_size;
        dev = std::max(dev, std::abs(man.warp.eval(r).h1 - 1.0));
    }
    return dev;
}

}  // namespace steklov
