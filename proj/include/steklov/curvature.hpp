#pragma once

#include <cmath>
#include <vector>

#include "steklov/scaling.hpp"

namespace steklov {

enum class ConstraintKind { fixed_area, fixed_radius };

// One-parameter family of constant-curvature disks: either the area or the
// geodesic radius is held fixed while the curvature K varies.
struct CurvatureFamily {
    ConstraintKind constraint;
    double value;  // area A, or radius rho

    CurvatureFamily(ConstraintKind c, double v) : constraint(c), value(v) {
        if (!(value > 0.0) || !std::isfinite(value))
            throw domain_error("curvature family: constraint value must be positive");
    }

    // Disks of curvature K exist under the constraint only for K below this.
    double K_max() const {
        const double pi = std::acos(-1.0);
        return constraint == ConstraintKind::fixed_area ? 4.0 * pi / value
                                                        : (pi / value) * (pi / value);
    }
};

// Radius of the comparison disk at unit curvature magnitude; at K = 0 the
// family degenerates and the Euclidean radius itself is returned.
inline double theta_of_K(const CurvatureFamily& fam, double K) {
    if (!(K < fam.K_max())) throw domain_error("theta_of_K: curvature beyond the constraint bound");
    const double pi = std::acos(-1.0);
    if (fam.constraint == ConstraintKind::fixed_radius) {
        if (std::abs(K) < 1e-12) return fam.value;
        return std::sqrt(std::abs(K)) * fam.value;
    }
    if (std::abs(K) < 1e-12) return std::sqrt(fam.value / pi);
    if (K > 0.0) return 2.0 * std::asin(std::sqrt(K * fam.value / (4.0 * pi)));
    return 2.0 * std::asinh(std::sqrt(-K * fam.value / (4.0 * pi)));
}

// Spectrum of the constant-curvature disk singled out by the family at K.
inline EigenResult eigen_of_K(const CurvatureFamily& fam, Problem p, int m, double K) {
    const double theta = theta_of_K(fam, K);
    const double R = std::abs(K) < 1e-12 ? theta : theta / std::sqrt(std::abs(K));
    return eigenvalue(ManifoldSpec(2, R, WarpSpec::space_form(K)), p, m);
}

// Curve sampling over a curvature grid; failures are recorded per point.
inline std::vector<CurvePoint> curvature_curve(const CurvatureFamily& fam, Problem p, int m,
                                               const std::vector<double>& K_grid) {
    std::vector<CurvePoint> curve;
    curve.reserve(K_grid.size());
    for (double K : K_grid) {
        CurvePoint pt{K, 0.0, 0.0, true};
        try {
            const EigenResult e = eigen_of_K(fam, p, m, K);
            pt.value = e.value;
            pt.est_error = e.est_error;
        } catch (const std::exception&) {
            pt.ok = false;
            pt.value = std::numeric_limits<double>::quiet_NaN();
        }
        curve.push_back(pt);
    }
    return curve;
}

// Classifies value(K) on the grid; a unimodal minimum is refined by
// bisection on the sign of the finite-difference slope in K.
inline MonotonicityReport curvature_monotonicity(const CurvatureFamily& fam, Problem p, int m,
                                                 const std::vector<double>& K_grid,
                                                 double margin = -1.0, double tol = 1e-6) {
    MonotonicityReport rep =
        monotonicity_report(curvature_curve(fam, p, m, K_grid), margin, TransitionKind::curvature);
    if (rep.verdict == Verdict::unimodal_min && rep.transition) {
        const auto value_at = [&](double K) { return eigen_of_K(fam, p, m, K).value; };
        rep.transition = detail::bisect_slope(value_at, rep.transition->bracket_lo,
                                              rep.transition->bracket_hi, tol,
                                              TransitionKind::curvature);
    }
    return rep;
}

}  // namespace steklov
