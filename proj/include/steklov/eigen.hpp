#pragma once

#include <cmath>
#include <string>

#include "steklov/manifold.hpp"
#include "steklov/quadrature.hpp"
#include "steklov/radial.hpp"

namespace steklov {

enum class Problem { sigma, xi, eta };

// Unit-curvature model geometries used by the 2D closed forms.
enum class Geometry { sphere, hyperbolic };

enum class Method { ode, closed_form_2d, closed_form_euclidean, coupled };

enum class MethodChoice { automatic, ode, closed_form, coupled };

struct EigenResult {
    ManifoldSpec manifold;
    Problem problem;
    int m;
    double value;
    double est_error;
    Method method;
};

inline WarpSpec geometry_warp(Geometry g) {
    return g == Geometry::sphere ? WarpSpec::sphere() : WarpSpec::hyperbolic();
}

inline const char* to_string(Problem p) {
    switch (p) {
        case Problem::sigma: return "sigma";
        case Problem::xi: return "xi";
        case Problem::eta: return "eta";
    }
    return "?";
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::ode: return "ode";
        case Method::closed_form_2d: return "closed_form_2d";
        case Method::closed_form_euclidean: return "closed_form_euclidean";
        case Method::coupled: return "coupled";
    }
    return "?";
}

// sigma = m/R, xi = m^2 (n+2m)/R^3, eta = (n+2m)/R for the flat ball.
inline double euclidean_closed_form(int n, Problem p, int m, double R) {
    if (n < 2 || m < 0 || !(R > 0.0)) throw domain_error("euclidean_closed_form: bad arguments");
    switch (p) {
        case Problem::sigma: return m / R;
        case Problem::xi: return static_cast<double>(m) * m * (n + 2.0 * m) / (R * R * R);
        case Problem::eta: return (n + 2.0 * m) / R;
    }
    throw domain_error("euclidean_closed_form: bad problem");
}

// Weight integral of the 2D closed forms: int_0^R tan(r/2)^(2m) sin(r) dr
// on the sphere, tanh/sinh on hyperbolic space.
inline double m_integral(Geometry g, int m, double R, double rel_tol = 1e-12) {
    if (m < 1 || !(R > 0.0)) throw domain_error("m_integral: bad arguments");
    if (g == Geometry::sphere && !(R < std::acos(-1.0)))
        throw domain_error("m_integral: sphere radius must stay below pi");
    const auto integrand = [g, m](double r) {
        return g == Geometry::sphere ? std::pow(std::tan(0.5 * r), 2 * m) * std::sin(r)
                                     : std::pow(std::tanh(0.5 * r), 2 * m) * std::sinh(r);
    };
    return quad::integrate(integrand, 0.0, R, rel_tol).value;
}

// Antiderivative evaluation for the sphere band m = 1; quadrature oracle.
// Written as -2 (log1p(-s^2) + s^2) with s = sin(R/2): the naive form
// -4 log cos(R/2) + cos R - 1 cancels to O(R^4) at small R and loses
// half the significant digits there.
inline double m_integral_sphere_m1(double R) {
    if (!(R > 0.0) || !(R < std::acos(-1.0))) throw domain_error("m_integral_sphere_m1: bad radius");
    const double s2 = std::sin(0.5 * R) * std::sin(0.5 * R);
    return -2.0 * (std::log1p(-s2) + s2);
}

// Fourth-order spectra of the 2D model geometries in terms of the weight
// integral; sigma is simply m over the boundary length factor.
inline EigenResult closed_form_2d(Geometry g, Problem p, int m, double R, double rel_tol = 1e-12) {
    if (m < 1) throw domain_error("closed_form_2d: band index must be >= 1");
    if (p == Problem::sigma) throw domain_error("closed_form_2d: only the fourth-order problems");
    ManifoldSpec man(2, R, geometry_warp(g));
    const bool sph = g == Geometry::sphere;
    const double s = sph ? std::sin(R) : std::sinh(R);
    const double t2m = std::pow(sph ? std::tan(0.5 * R) : std::tanh(0.5 * R), 2 * m);
    const auto integrand = [sph, m](double r) {
        return sph ? std::pow(std::tan(0.5 * r), 2 * m) * std::sin(r)
                   : std::pow(std::tanh(0.5 * r), 2 * m) * std::sinh(r);
    };
    const quad::Result M = quad::integrate(integrand, 0.0, R, rel_tol);
    const double rel = M.abs_err / std::abs(M.value) + 1e-15;
    double value = 0.0;
    if (p == Problem::xi) value = static_cast<double>(m) * m * t2m / (s * M.value);
    if (p == Problem::eta) value = t2m * s / M.value;
    return {man, p, m, value, std::abs(value) * rel, Method::closed_form_2d};
}

namespace detail {

inline bool euclidean_like(const WarpSpec& w) {
    return w.kind() == WarpKind::euclidean ||
           (w.kind() == WarpKind::space_form && std::abs(w.curvature()) < 1e-12);
}

// Space forms reduce to the unit geometries: curvature K and radius R give
// the unit problem at scaled radius sqrt(|K|) R, eigenvalues scaling by
// |K|^(1/2) per inverse power of length.
struct UnitReduction {
    Geometry geometry;
    double theta;
    double scale;  // sqrt(|K|)
};

inline bool reduces_to_unit(const WarpSpec& w, double R, UnitReduction& out) {
    switch (w.kind()) {
        case WarpKind::sphere: out = {Geometry::sphere, R, 1.0}; return true;
        case WarpKind::hyperbolic: out = {Geometry::hyperbolic, R, 1.0}; return true;
        case WarpKind::space_form: {
            const double k = w.curvature();
            if (std::abs(k) < 1e-12) return false;
            const double s = std::sqrt(std::abs(k));
            out = {k > 0.0 ? Geometry::sphere : Geometry::hyperbolic, s * R, s};
            return true;
        }
        default: return false;
    }
}

inline Method auto_method_tag(const ManifoldSpec& man) {
    if (euclidean_like(man.warp)) return Method::closed_form_euclidean;
    UnitReduction red;
    if (man.n == 2 && reduces_to_unit(man.warp, man.R, red)) return Method::closed_form_2d;
    return Method::ode;
}

inline double boundary_weight(const ManifoldSpec& man) {
    return ipow(man.warp.eval(man.R).h, man.n - 1);
}

// Boundary-to-volume ratio via adaptive quadrature of h^(n-1).
inline double eta0_quadrature(const ManifoldSpec& man, double rel_tol = 1e-12) {
    const quad::Result vol = quad::integrate(
        [&man](double r) { return ipow(man.warp.eval(r).h, man.n - 1); }, 0.0, man.R, rel_tol);
    return boundary_weight(man) / vol.value;
}

}  // namespace detail

inline EigenResult sigma(const ManifoldSpec& man, int m, MethodChoice choice = MethodChoice::automatic,
                         double rtol = 1e-10) {
    if (m < 0) throw domain_error("sigma: band index must be >= 0");
    if (choice == MethodChoice::coupled) throw domain_error("sigma: no coupled formulation");
    if (m == 0) return {man, Problem::sigma, 0, 0.0, 0.0, detail::auto_method_tag(man)};

    if (choice == MethodChoice::ode) {
        const RadialSolution sol = integrate_u(man, m, RadialOptions{rtol, 1e-13, 1.0, 1.0});
        return {man, Problem::sigma, m, sol.y_R, std::abs(sol.y_R) * std::max(sol.est_error, rtol),
                Method::ode};
    }

    if (detail::euclidean_like(man.warp)) {
        const double v = euclidean_closed_form(man.n, Problem::sigma, m, man.R);
        return {man, Problem::sigma, m, v, 0.0, Method::closed_form_euclidean};
    }
    detail::UnitReduction red;
    if (man.n == 2 && detail::reduces_to_unit(man.warp, man.R, red)) {
        // In 2D the logarithmic slope h u'/u is identically m, so sigma is
        // m over the boundary length factor for every model geometry.
        const double v = m / man.warp.eval(man.R).h;
        return {man, Problem::sigma, m, v, std::abs(v) * 1e-15, Method::closed_form_2d};
    }
    if (choice == MethodChoice::closed_form) throw domain_error("sigma: no closed form for this manifold");

    const double z = integrate_z(man, m, rtol);
    const double v = z / man.warp.eval(man.R).h;
    return {man, Problem::sigma, m, v, std::abs(v) * rtol * 100.0, Method::ode};
}

inline EigenResult xi(const ManifoldSpec& man, int m, MethodChoice choice = MethodChoice::automatic,
                      double rtol = 1e-10);
inline EigenResult eta(const ManifoldSpec& man, int m, MethodChoice choice = MethodChoice::automatic,
                       double rtol = 1e-10);

// Coupled fourth-order route: integrates the homogeneous band profile u
// together with a particular solution p of L p = u, then superposes a
// multiple of u onto p to meet the boundary condition.
namespace detail {

struct CoupledEndpoint {
    double u, du, p, dp;
    double est_error;
};

inline CoupledEndpoint integrate_coupled(const ManifoldSpec& man, int m, double rtol) {
    const double t = tau(man.n, m);
    const int n = man.n;
    const double r0 = start_radius(man.R, 1.0);
    if (!(r0 < man.R)) throw domain_error("coupled: start radius exceeds R");

    auto rhs = [&](double r, const std::array<double, 4>& y, std::array<double, 4>& dy) {
        const WarpDerivs d = man.warp.eval(r);
        const double q = t / (d.h * d.h);
        const double drift = (n - 1) * d.h1 / d.h;
        dy[0] = y[1];
        dy[1] = q * y[0] - drift * y[1];
        dy[2] = y[3];
        dy[3] = y[0] + q * y[2] - drift * y[3];
    };

    // Leading terms: u ~ r^m and the particular solution ~ r^(m+2)/(2n+4m),
    // both normalized by u(r0) = 1.
    const double denom = 2.0 * n + 4.0 * m;
    std::array<double, 4> y{1.0, m / r0, r0 * r0 / denom, (m + 2.0) * r0 / denom};
    auto renorm = [](double, std::array<double, 4>& state) {
        const double mag = std::max({std::abs(state[0]), std::abs(state[1]), std::abs(state[2]),
                                     std::abs(state[3])});
        if (mag > 1e100)
            for (double& v : state) v /= mag;
    };
    ode::Options oopt{rtol, 1e-13, 0.05 * r0, 2000000};
    const ode::Stats stats = ode::integrate<4>(rhs, r0, man.R, y, oopt, renorm);
    return {y[0], y[1], y[2], y[3], stats.err_accum};
}

}  // namespace detail

inline EigenResult xi_coupled_crosscheck(const ManifoldSpec& man, int m, double rtol = 1e-10) {
    if (m < 1) throw domain_error("xi_coupled_crosscheck: band index must be >= 1");
    const detail::CoupledEndpoint e = detail::integrate_coupled(man, m, rtol);
    if (e.du == 0.0) throw numeric_error("xi_coupled_crosscheck: degenerate superposition");
    const double c = -e.dp / e.du;
    const double psi_R = e.p + c * e.u;
    if (psi_R == 0.0) throw numeric_error("xi_coupled_crosscheck: vanishing boundary value");
    const double value = -e.du / psi_R;
    return {man, Problem::xi, m, value, std::abs(value) * std::max(e.est_error * 10.0, rtol * 100.0),
            Method::coupled};
}

inline EigenResult eta_coupled_crosscheck(const ManifoldSpec& man, int m, double rtol = 1e-10) {
    if (m < 0) throw domain_error("eta_coupled_crosscheck: band index must be >= 0");
    if (m == 0) {
        // With the mean-zero band absent the companion field is constant and
        // the system collapses to the volume integral, here taken by ODE.
        const double value = detail::boundary_weight(man) / integrate_volume(man, rtol);
        return {man, Problem::eta, 0, value, std::abs(value) * rtol * 100.0, Method::coupled};
    }
    const detail::CoupledEndpoint e = detail::integrate_coupled(man, m, rtol);
    if (e.u == 0.0) throw numeric_error("eta_coupled_crosscheck: degenerate superposition");
    const double c = -e.p / e.u;
    const double dpsi_R = e.dp + c * e.du;
    if (dpsi_R == 0.0) throw numeric_error("eta_coupled_crosscheck: vanishing normal derivative");
    const double value = e.u / dpsi_R;
    return {man, Problem::eta, m, value, std::abs(value) * std::max(e.est_error * 10.0, rtol * 100.0),
            Method::coupled};
}

inline EigenResult xi(const ManifoldSpec& man, int m, MethodChoice choice, double rtol) {
    if (m < 1) throw domain_error("xi: band index must be >= 1");
    if (choice == MethodChoice::coupled) return xi_coupled_crosscheck(man, m, rtol);

    if (choice != MethodChoice::ode) {
        if (detail::euclidean_like(man.warp)) {
            const double v = euclidean_closed_form(man.n, Problem::xi, m, man.R);
            return {man, Problem::xi, m, v, 0.0, Method::closed_form_euclidean};
        }
        detail::UnitReduction red;
        if (man.n == 2 && detail::reduces_to_unit(man.warp, man.R, red)) {
            EigenResult unit = closed_form_2d(red.geometry, Problem::xi, m, red.theta);
            const double s3 = red.scale * red.scale * red.scale;
            return {man, Problem::xi, m, unit.value * s3, unit.est_error * s3, Method::closed_form_2d};
        }
        if (choice == MethodChoice::closed_form)
            throw domain_error("xi: no closed form for this manifold");
    }

    const RadialSolution sol = integrate_u(man, m, RadialOptions{rtol, 1e-13, 1.0, 1.0});
    const double value = detail::boundary_weight(man) * sol.du_R * sol.du_R / sol.integral;
    return {man, Problem::xi, m, value, std::abs(value) * std::max(sol.est_error, rtol * 10.0),
            Method::ode};
}

inline EigenResult eta(const ManifoldSpec& man, int m, MethodChoice choice, double rtol) {
    if (m < 0) throw domain_error("eta: band index must be >= 0");
    if (choice == MethodChoice::coupled) return eta_coupled_crosscheck(man, m, rtol);

    if (m == 0) {
        if (choice != MethodChoice::ode) {
            if (detail::euclidean_like(man.warp))
                return {man, Problem::eta, 0, man.n / man.R, 0.0, Method::closed_form_euclidean};
            detail::UnitReduction red;
            if (man.n == 2 && detail::reduces_to_unit(man.warp, man.R, red)) {
                const double half = 0.5 * red.theta;
                const double v = red.scale * (red.geometry == Geometry::sphere
                                                  ? std::cos(half) / std::sin(half)
                                                  : std::cosh(half) / std::sinh(half));
                return {man, Problem::eta, 0, v, std::abs(v) * 1e-15, Method::closed_form_2d};
            }
            if (choice == MethodChoice::closed_form)
                throw domain_error("eta: no closed form for this manifold");
        }
        const double v = detail::eta0_quadrature(man);
        return {man, Problem::eta, 0, v, std::abs(v) * 1e-11, Method::ode};
    }

    if (choice != MethodChoice::ode) {
        if (detail::euclidean_like(man.warp)) {
            const double v = euclidean_closed_form(man.n, Problem::eta, m, man.R);
            return {man, Problem::eta, m, v, 0.0, Method::closed_form_euclidean};
        }
        detail::UnitReduction red;
        if (man.n == 2 && detail::reduces_to_unit(man.warp, man.R, red)) {
            EigenResult unit = closed_form_2d(red.geometry, Problem::eta, m, red.theta);
            return {man, Problem::eta, m, unit.value * red.scale, unit.est_error * red.scale,
                    Method::closed_form_2d};
        }
        if (choice == MethodChoice::closed_form)
            throw domain_error("eta: no closed form for this manifold");
    }

    const RadialSolution sol = integrate_u(man, m, RadialOptions{rtol, 1e-13, 1.0, 1.0});
    const double value = detail::boundary_weight(man) * sol.u_R * sol.u_R / sol.integral;
    return {man, Problem::eta, m, value, std::abs(value) * std::max(sol.est_error, rtol * 10.0),
            Method::ode};
}

inline EigenResult eigenvalue(const ManifoldSpec& man, Problem p, int m,
                              MethodChoice choice = MethodChoice::automatic, double rtol = 1e-10) {
    switch (p) {
        case Problem::sigma: return sigma(man, m, choice, rtol);
        case Problem::xi: return xi(man, m, choice, rtol);
        case Problem::eta: return eta(man, m, choice, rtol);
    }
    throw domain_error("eigenvalue: bad problem");
}

}  // namespace steklov
