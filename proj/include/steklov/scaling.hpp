#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "steklov/eigen.hpp"

namespace steklov {

// Radius-dependent factors the spectra are multiplied by before asking for
// monotonicity; trig for the sphere, hyperbolic analogues otherwise.
enum class NormalizerKind { geodesic_radius, boundary_radius, stereographic, area_factor };

struct Normalizer {
    NormalizerKind kind;
    int power = 1;
};

inline double normalizer_factor(Geometry g, NormalizerKind kind, double R) {
    const bool sph = g == Geometry::sphere;
    switch (kind) {
        case NormalizerKind::geodesic_radius: return R;
        case NormalizerKind::boundary_radius: return sph ? std::sin(R) : std::sinh(R);
        case NormalizerKind::stereographic: return sph ? std::tan(0.5 * R) : std::tanh(0.5 * R);
        case NormalizerKind::area_factor: return sph ? std::sin(0.5 * R) : std::sinh(0.5 * R);
    }
    throw domain_error("normalizer_factor: bad kind");
}

inline const char* to_string(NormalizerKind k) {
    switch (k) {
        case NormalizerKind::geodesic_radius: return "R";
        case NormalizerKind::boundary_radius: return "sinR";
        case NormalizerKind::stereographic: return "tanHalf";
        case NormalizerKind::area_factor: return "sinHalf";
    }
    return "?";
}

inline NormalizerKind parse_normalizer(const std::string& name) {
    if (name == "R") return NormalizerKind::geodesic_radius;
    if (name == "sinR") return NormalizerKind::boundary_radius;
    if (name == "tanHalf") return NormalizerKind::stereographic;
    if (name == "sinHalf") return NormalizerKind::area_factor;
    throw domain_error("normalizer: unknown name '" + name + "'");
}

struct CurvePoint {
    double x;          // radius, or curvature for the curvature families
    double value;
    double est_error;
    bool ok;
};

// Samples eigenvalue * factor(R)^power over the grid; failed points are
// recorded with ok = false rather than aborting the scan.
inline std::vector<CurvePoint> normalized_curve(Geometry g, int n, Problem p, int m,
                                                Normalizer norm, const std::vector<double>& grid,
                                                double rtol = 1e-10) {
    std::vector<CurvePoint> curve;
    curve.reserve(grid.size());
    for (double R : grid) {
        CurvePoint pt{R, 0.0, 0.0, true};
        try {
            const EigenResult e = eigenvalue(ManifoldSpec(n, R, geometry_warp(g)), p, m,
                                             MethodChoice::automatic, rtol);
            const double f = std::pow(normalizer_factor(g, norm.kind, R), norm.power);
            pt.value = e.value * f;
            pt.est_error = e.est_error * std::abs(f);
        } catch (const std::exception&) {
            pt.ok = false;
            pt.value = std::numeric_limits<double>::quiet_NaN();
        }
        curve.push_back(pt);
    }
    return curve;
}

inline std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    if (count < 2 || !(hi > lo)) throw domain_error("uniform_grid: bad arguments");
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
    return grid;
}

enum class Verdict { increasing, decreasing, unimodal_min, nonmonotone_other };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::increasing: return "increasing";
        case Verdict::decreasing: return "decreasing";
        case Verdict::unimodal_min: return "unimodal_min";
        case Verdict::nonmonotone_other: return "nonmonotone_other";
    }
    return "?";
}

enum class TransitionKind { radius, curvature };

struct TransitionPoint {
    double location;
    double bracket_lo;
    double bracket_hi;
    TransitionKind kind;
    double residual;  // |slope| at the reported location
};

struct MonotonicityReport {
    Verdict verdict;
    std::size_t samples;
    double min_gap;  // smallest difference magnitude supporting the verdict
    std::optional<TransitionPoint> transition;
};

// Classifies the sign pattern of consecutive differences. The margin is
// relative: a difference counts only when it clears margin times the local
// value magnitude, so curves spanning many orders of magnitude are judged
// by local slope, not by their largest value. increasing and decreasing are
// strict: every difference must clear its margin. A single sign change from
// - to +, with at most a sub-margin trough between the runs, is
// unimodal_min; anything else is nonmonotone_other.
inline MonotonicityReport monotonicity_report(const std::vector<CurvePoint>& curve,
                                              double margin = -1.0,
                                              TransitionKind kind = TransitionKind::radius) {
    std::vector<CurvePoint> pts;
    for (const CurvePoint& p : curve)
        if (p.ok) pts.push_back(p);
    if (pts.size() < 32) throw domain_error("monotonicity_report: need at least 32 samples");

    if (margin < 0.0) margin = 1e-9;

    const std::size_t nd = pts.size() - 1;
    std::vector<double> diff(nd), thresh(nd);
    for (std::size_t i = 0; i < nd; ++i) {
        diff[i] = pts[i + 1].value - pts[i].value;
        thresh[i] = margin * std::max(std::abs(pts[i].value), std::abs(pts[i + 1].value));
    }

    bool all_up = true, all_down = true;
    for (std::size_t i = 0; i < nd; ++i) {
        all_up = all_up && diff[i] > thresh[i];
        all_down = all_down && diff[i] < -thresh[i];
    }

    MonotonicityReport rep{Verdict::nonmonotone_other, pts.size(), 0.0, std::nullopt};
    double min_abs = std::numeric_limits<double>::infinity();
    for (double d : diff) min_abs = std::min(min_abs, std::abs(d));

    if (all_up || all_down) {
        rep.verdict = all_up ? Verdict::increasing : Verdict::decreasing;
        rep.min_gap = min_abs;
        return rep;
    }

    // Unimodal minimum: a strict descent, at most a sub-margin trough, then
    // a strict ascent through the end of the grid.
    std::ptrdiff_t last_neg = -1, first_pos = -1;
    for (std::size_t i = 0; i < nd; ++i) {
        if (diff[i] < -thresh[i]) last_neg = static_cast<std::ptrdiff_t>(i);
        if (diff[i] > thresh[i] && first_pos < 0) first_pos = static_cast<std::ptrdiff_t>(i);
    }
    bool unimodal = last_neg >= 0 && first_pos > last_neg;
    for (std::ptrdiff_t i = 0; unimodal && i <= last_neg; ++i) unimodal = diff[i] < -thresh[i];
    for (std::ptrdiff_t i = first_pos; unimodal && i < static_cast<std::ptrdiff_t>(nd); ++i)
        unimodal = diff[i] > thresh[i];

    if (unimodal) {
        rep.verdict = Verdict::unimodal_min;
        double min_sig = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < nd; ++i)
            if (std::abs(diff[i]) > thresh[i]) min_sig = std::min(min_sig, std::abs(diff[i]));
        rep.min_gap = min_sig;
        std::size_t argmin = 0;
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (pts[i].value < pts[argmin].value) argmin = i;
        TransitionPoint tp{pts[argmin].x, pts[static_cast<std::size_t>(last_neg)].x,
                           pts[static_cast<std::size_t>(first_pos) + 1].x, kind, 0.0};
        const double step = pts[argmin == 0 ? 1 : argmin].x - pts[argmin == 0 ? 0 : argmin - 1].x;
        tp.residual = std::abs(diff[std::min(argmin, nd - 1)]) / step;
        rep.transition = tp;
        return rep;
    }

    rep.min_gap = min_abs;
    return rep;
}

namespace detail {

// Bisection on the sign of a centered finite-difference slope.
inline TransitionPoint bisect_slope(const std::function<double(double)>& value_at, double lo,
                                    double hi, double tol, TransitionKind kind) {
    if (!(hi > lo)) throw domain_error("find_transition: bad bracket");
    const auto slope = [&value_at](double x) {
        const double step = std::max(1e-5, 1e-4 * std::abs(x));
        return (value_at(x + step) - value_at(x - step)) / (2.0 * step);
    };
    double slo = slope(lo), shi = slope(hi);
    if (slo == 0.0) return {lo, lo, hi, kind, 0.0};
    if (shi == 0.0) return {hi, lo, hi, kind, 0.0};
    if ((slo < 0.0) == (shi < 0.0))
        throw bracket_error("find_transition: slope has the same sign at both ends");
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double smid = slope(mid);
        if (smid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((smid < 0.0) == (slo < 0.0)) {
            lo = mid;
            slo = smid;
        } else {
            hi = mid;
        }
    }
    const double mid = 0.5 * (lo + hi);
    return {mid, lo, hi, kind, std::abs(slope(mid))};
}

}  // namespace detail

// Locates the radius where the slope of the normalized curve changes sign.
inline TransitionPoint find_transition(Geometry g, int n, Problem p, int m, Normalizer norm,
                                       double bracket_lo, double bracket_hi, double tol = 1e-6,
                                       double rtol = 1e-10) {
    const auto value_at = [&](double R) {
        const EigenResult e =
            eigenvalue(ManifoldSpec(n, R, geometry_warp(g)), p, m, MethodChoice::automatic, rtol);
        return e.value * std::pow(normalizer_factor(g, norm.kind, R), norm.power);
    };
    return detail::bisect_slope(value_at, bracket_lo, bracket_hi, tol, TransitionKind::radius);
}

}  // namespace steklov
