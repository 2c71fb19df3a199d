#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

#include "steklov/manifold.hpp"
#include "steklov/ode.hpp"

namespace steklov {

struct RadialOptions {
    double rtol = 1e-10;
    double atol = 1e-13;
    double r0_scale = 1.0;      // multiplies the default start radius (tests)
    double initial_scale = 1.0; // multiplies the scale-free initial data (tests)
};

// Endpoint data of the band-m radial profile u, normalized so u(r0) = 1.
// True magnitudes carry the factor exp(log_scale); the ratios y_R, z_R and
// integral/u_R^2 are scale-free.
struct RadialSolution {
    double u_R;
    double du_R;
    double integral;  // weighted volume integral of h^(n-1) u^2 over [0, R]
    double log_scale;
    double y_R;       // u'(R)/u(R)
    double z_R;       // h(R) u'(R)/u(R)
    std::size_t steps;
    double est_error; // accumulated local relative error, diagnostic only
};

namespace detail {

inline double ipow(double x, int e) {
    double out = 1.0;
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}

inline double start_radius(double R, double r0_scale) {
    return r0_scale * std::max(1e-8, 1e-5 * R);
}

}  // namespace detail

// Integrates u'' + (n-1)(h'/h) u' = tau u / h^2 outward from the leading
// r^m behavior at the pole, accumulating the h^(n-1) u^2 volume integral.
inline RadialSolution integrate_u(const ManifoldSpec& man, int m, RadialOptions opt = {}) {
    if (m < 1) throw domain_error("integrate_u: band index must be >= 1");
    const double t = tau(man.n, m);
    const int n = man.n;
    const double r0 = detail::start_radius(man.R, opt.r0_scale);
    if (!(r0 < man.R)) throw domain_error("integrate_u: start radius exceeds R");

    auto rhs = [&](double r, const std::array<double, 3>& y, std::array<double, 3>& dy) {
        const WarpDerivs d = man.warp.eval(r);
        dy[0] = y[1];
        dy[1] = t / (d.h * d.h) * y[0] - (n - 1) * d.h1 / d.h * y[1];
        dy[2] = detail::ipow(d.h, n - 1) * y[0] * y[0];
    };

    std::array<double, 3> y{opt.initial_scale, opt.initial_scale * m / r0, 0.0};
    double log_scale = 0.0;
    auto renorm = [&log_scale](double, std::array<double, 3>& state) {
        const double mag = std::max(std::abs(state[0]), std::abs(state[1]));
        if (mag > 1e100) {
            state[0] /= mag;
            state[1] /= mag;
            state[2] /= mag * mag;
            log_scale += std::log(mag);
        }
    };

    ode::Options oopt{opt.rtol, opt.atol, 0.05 * r0, 2000000};
    const ode::Stats stats = ode::integrate<3>(rhs, r0, man.R, y, oopt, renorm);

    const double hR = man.warp.eval(man.R).h;
    return RadialSolution{y[0],       y[1], y[2],          log_scale,
                          y[1] / y[0], hR * y[1] / y[0], stats.steps, stats.err_accum};
}

// Riccati form z = h u'/u, which stays bounded where u itself blows up:
// z' = -(z^2 + (n-2) h' z - tau)/h with z -> m at the pole.
inline double integrate_z(const ManifoldSpec& man, int m, double rtol = 1e-10,
                          const std::function<void(double, double)>& observe = {}) {
    if (m < 1) throw domain_error("integrate_z: band index must be >= 1");
    const double t = tau(man.n, m);
    const int n = man.n;
    const double r0 = detail::start_radius(man.R, 1.0);
    if (!(r0 < man.R)) throw domain_error("integrate_z: start radius exceeds R");

    auto rhs = [&](double r, const std::array<double, 1>& y, std::array<double, 1>& dy) {
        const WarpDerivs d = man.warp.eval(r);
        dy[0] = -(y[0] * y[0] + (n - 2) * d.h1 * y[0] - t) / d.h;
    };

    std::array<double, 1> y{static_cast<double>(m)};
    auto guard = [&observe](double r, std::array<double, 1>& state) {
        if (std::abs(state[0]) > 1e12)
            throw solver_error("integrate_z: solution blew up", r);
        if (observe) observe(r, state[0]);
    };

    ode::Options oopt{rtol, 1e-13, 0.05 * r0, 2000000};
    ode::integrate<1>(rhs, r0, man.R, y, oopt, guard);
    return y[0];
}

// Volume integral of h^(n-1) over [0, R] through the ODE stepper; serves as
// an independent route to the boundary-to-volume ratio.
inline double integrate_volume(const ManifoldSpec& man, double rtol = 1e-12) {
    const int n = man.n;
    auto rhs = [&](double r, const std::array<double, 1>&, std::array<double, 1>& dy) {
        dy[0] = detail::ipow(man.warp.eval(r).h, n - 1);
    };
    std::array<double, 1> y{0.0};
    // The integrand vanishes to order n-1 at the pole, starving the relative
    // error scale there; an absolute floor at rounding level of the answer's
    // magnitude keeps the controller moving.
    const double mag = std::max(detail::ipow(man.warp.eval(0.5 * man.R).h, n - 1),
                                detail::ipow(man.warp.eval(man.R).h, n - 1));
    ode::Options oopt{rtol, 1e-16 * mag * man.R + 1e-300, 1e-4 * man.R, 2000000};
    ode::integrate<1>(rhs, 0.0, man.R, y, oopt);
    return y[0];
}

}  // namespace steklov
