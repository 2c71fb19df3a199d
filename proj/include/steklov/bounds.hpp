#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "steklov/eigen.hpp"
#include "steklov/hypotheses.hpp"

namespace steklov {

enum class BoundCheck { xi_bound, eta_bound, eta_ratio };

inline const char* to_string(BoundCheck c) {
    switch (c) {
        case BoundCheck::xi_bound: return "xi_bound";
        case BoundCheck::eta_bound: return "eta_bound";
        case BoundCheck::eta_ratio: return "eta_ratio";
    }
    return "?";
}

struct BoundsReport {
    ManifoldSpec manifold;
    BoundCheck check;
    int m;
    bool applicable;  // false when neither curvature-sign regime holds
    std::optional<double> lower;
    std::optional<double> upper;
    double value;
    std::optional<double> lower_slack;  // value - lower
    std::optional<double> upper_slack;  // upper - value
    HypothesisReport hypotheses;
    bool equality_flag;  // slacks vanish and the warp is flat to 1e-9
};

namespace detail {

inline void finish_report(BoundsReport& rep, const ManifoldSpec& man) {
    if (rep.lower) rep.lower_slack = rep.value - *rep.lower;
    if (rep.upper) rep.upper_slack = *rep.upper - rep.value;
    bool tight = rep.applicable && (rep.lower_slack || rep.upper_slack);
    const double tol = 1e-7 * std::max(std::abs(rep.value), 1e-300);
    if (rep.lower_slack) tight = tight && std::abs(*rep.lower_slack) <= tol;
    if (rep.upper_slack) tight = tight && std::abs(*rep.upper_slack) <= tol;
    rep.equality_flag = tight && max_deviation_from_flat(man) <= 1e-9;
}

}  // namespace detail

// Sharp two-sided (n = 2) or one-sided (n >= 3) bounds on xi in terms of
// boundary data, switching orientation with the sign of the Ricci curvature.
inline BoundsReport verify_xi_bounds(const ManifoldSpec& man, int m, double rtol = 1e-10,
                                     int grid_size = 256) {
    if (m < 1) throw domain_error("verify_xi_bounds: band index must be >= 1");
    const HypothesisReport hyp = check_hypotheses(man, grid_size);
    BoundsReport rep{man,          BoundCheck::xi_bound, m,           false,
                     std::nullopt, std::nullopt,         0.0,         std::nullopt,
                     std::nullopt, hyp,                  false};
    rep.value = xi(man, m, MethodChoice::automatic, rtol).value;

    const WarpDerivs b = man.warp.eval(man.R);
    const double h3 = b.h * b.h * b.h;
    const double base = static_cast<double>(m) * m * (man.n + 2.0 * m);
    const bool convex = hyp.convex_boundary;
    if (hyp.ricci_nonneg && convex) {
        rep.applicable = true;
        if (man.n == 2) {
            rep.lower = base * b.h1 / h3;
            rep.upper = base / h3;
        } else if (man.n == 3) {
            rep.lower = base * b.h1 / h3;
        } else {
            rep.lower = base / h3;
        }
    } else if (hyp.ricci_nonpos && convex) {
        rep.applicable = true;
        if (man.n == 2) {
            rep.lower = base / h3;
            rep.upper = base * b.h1 / h3;
        } else if (man.n == 3) {
            rep.upper = base * b.h1 / h3;
        } else {
            rep.upper = base / h3;
        }
    }
    detail::finish_report(rep, man);
    return rep;
}

// Sharp bounds on eta between (n+2m) h'(R)/h(R) and (n+2m)/h(R), reversed
// under nonpositive Ricci except for the one-sided n = 3 band case.
inline BoundsReport verify_eta_bounds(const ManifoldSpec& man, int m, double rtol = 1e-10,
                                      int grid_size = 256) {
    if (m < 0) throw domain_error("verify_eta_bounds: band index must be >= 0");
    const HypothesisReport hyp = check_hypotheses(man, grid_size);
    BoundsReport rep{man,          BoundCheck::eta_bound, m,           false,
                     std::nullopt, std::nullopt,          0.0,         std::nullopt,
                     std::nullopt, hyp,                   false};
    rep.value = eta(man, m, MethodChoice::automatic, rtol).value;

    const WarpDerivs b = man.warp.eval(man.R);
    const double base = man.n + 2.0 * m;
    const bool convex = hyp.convex_boundary;
    if (hyp.ricci_nonneg && convex) {
        rep.applicable = true;
        rep.lower = base * b.h1 / b.h;
        rep.upper = base / b.h;
    } else if (hyp.ricci_nonpos && convex) {
        rep.applicable = true;
        if (m >= 1 && man.n == 3) {
            rep.upper = base * b.h1 / b.h;
        } else {
            rep.lower = base / b.h;
            rep.upper = base * b.h1 / b.h;
        }
    }
    detail::finish_report(rep, man);
    return rep;
}

// Ratio of consecutive eta bands against (n+2m+2)/(n+2m); only stated for
// nonnegative Ricci with a convex boundary.
inline BoundsReport verify_eta_ratio(const ManifoldSpec& man, int m, double rtol = 1e-10,
                                     int grid_size = 256) {
    if (m < 0) throw domain_error("verify_eta_ratio: band index must be >= 0");
    const HypothesisReport hyp = check_hypotheses(man, grid_size);
    BoundsReport rep{man,          BoundCheck::eta_ratio, m,           false,
                     std::nullopt, std::nullopt,          0.0,         std::nullopt,
                     std::nullopt, hyp,                   false};
    const double num = eta(man, m + 1, MethodChoice::automatic, rtol).value;
    const double den = eta(man, m, MethodChoice::automatic, rtol).value;
    rep.value = num / den;
    if (hyp.ricci_nonneg && hyp.convex_boundary) {
        rep.applicable = true;
        rep.lower = (man.n + 2.0 * m + 2.0) / (man.n + 2.0 * m);
    }
    detail::finish_report(rep, man);
    return rep;
}

// Draws odd-polynomial warps with a3 in [-0.3, 0], a5 in [-0.05, 0.05] and
// R in [0.2, 1.2], rejecting until concavity, 0 < h' <= 1 and boundary
// convexity all hold.
inline ManifoldSpec sample_admissible_manifold(int n, std::mt19937_64& rng,
                                               int max_attempts = 200) {
    std::uniform_real_distribution<double> a3_dist(-0.3, 0.0);
    std::uniform_real_distribution<double> a5_dist(-0.05, 0.05);
    std::uniform_real_distribution<double> R_dist(0.2, 1.2);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const double a3 = a3_dist(rng);
        const double a5 = a5_dist(rng);
        const double R = R_dist(rng);
        const WarpSpec warp = WarpSpec::odd_polynomial({a3, a5});
        if (!(R < warp.max_radius())) continue;
        const ManifoldSpec man(n, R, warp);
        const HypothesisReport hyp = check_hypotheses(man);
        if (hyp.lemma1_holds && hyp.convex_boundary) return man;
    }
    throw sampling_error("sample_admissible_manifold: rejection budget exhausted after " +
                         std::to_string(max_attempts) + " attempts");
}

// Runs every bound check on `trials` sampled warps and keeps, per trial, the
// report with the smallest relative slack (the binding inequality). Trial i
// draws from a generator seeded by (seed, i), so runs are reproducible and
// order-independent.
inline std::vector<BoundsReport> fuzz_bounds(int n, int m_max, int trials, std::uint64_t seed,
                                             double rtol = 1e-10) {
    if (n < 2 || m_max < 1 || trials < 0) throw domain_error("fuzz_bounds: bad arguments");
    std::vector<BoundsReport> worst_per_trial;
    worst_per_trial.reserve(static_cast<std::size_t>(trials));
    for (int trial = 0; trial < trials; ++trial) {
        std::seed_seq seq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(trial)};
        std::mt19937_64 rng(seq);
        const ManifoldSpec man = sample_admissible_manifold(n, rng);

        std::optional<BoundsReport> worst;
        double worst_rel = std::numeric_limits<double>::infinity();
        const auto consider = [&](BoundsReport&& rep) {
            double rel = std::numeric_limits<double>::infinity();
            const double scale = std::max(std::abs(rep.value), 1e-300);
            if (rep.lower_slack) rel = std::min(rel, *rep.lower_slack / scale);
            if (rep.upper_slack) rel = std::min(rel, *rep.upper_slack / scale);
            if (!worst || rel < worst_rel) {
                worst_rel = rel;
                worst = std::move(rep);
            }
        };
        for (int m = 1; m <= m_max; ++m) consider(verify_xi_bounds(man, m, rtol));
        for (int m = 0; m <= m_max; ++m) consider(verify_eta_bounds(man, m, rtol));
        for (int m = 0; m < m_max; ++m) consider(verify_eta_ratio(man, m, rtol));
        worst_per_trial.push_back(*worst);
    }
    return worst_per_trial;
}

}  // namespace steklov
