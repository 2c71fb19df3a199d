#pragma once

#include <cmath>

#include "steklov/errors.hpp"
#include "steklov/warp.hpp"

namespace steklov {

// Geodesic ball of radius R about the pole of an n-dimensional warped product.
struct ManifoldSpec {
    int n;
    double R;
    WarpSpec warp;

    ManifoldSpec(int dim, double radius, WarpSpec w) : n(dim), R(radius), warp(std::move(w)) {
        if (n < 2) throw domain_error("manifold: dimension must be >= 2");
        if (!(R > 0.0) || !std::isfinite(R)) throw domain_error("manifold: radius must be positive");
        if (!(R < warp.max_radius())) throw domain_error("manifold: radius reaches warp degeneracy");
    }
};

// Eigenvalue of the sphere Laplacian on the m-th harmonic band.
inline double tau(int n, int m) {
    if (m < 0) throw domain_error("tau: band index must be >= 0");
    return static_cast<double>(m) * (n - 2 + m);
}

}  // namespace steklov
