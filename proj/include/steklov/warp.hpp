#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

enum class WarpKind { euclidean, sphere, hyperbolic, space_form, odd_polynomial };

// Warp function and its first two derivatives at one radius.
struct WarpDerivs {
    double h;
    double h1;
    double h2;
};

// Warp function h of a rotationally symmetric metric dr^2 + h(r)^2 g_S.
// All kinds satisfy h(0)=0, h'(0)=1 and vanishing even derivatives at 0,
// so the metric closes up smoothly at the pole.
class WarpSpec {
  public:
    static WarpSpec euclidean() { return WarpSpec(WarpKind::euclidean, 0.0, {}); }
    static WarpSpec sphere() { return WarpSpec(WarpKind::sphere, 1.0, {}); }
    static WarpSpec hyperbolic() { return WarpSpec(WarpKind::hyperbolic, -1.0, {}); }

    static WarpSpec space_form(double curvature) {
        if (!std::isfinite(curvature)) throw domain_error("space_form: curvature must be finite");
        return WarpSpec(WarpKind::space_form, curvature, {});
    }

    // coeffs[k] multiplies r^(2k+3): h(r) = r + a3 r^3 + a5 r^5 + ...
    static WarpSpec odd_polynomial(std::vector<double> coeffs) {
        for (double a : coeffs) {
            if (!std::isfinite(a)) throw domain_error("odd_polynomial: coefficients must be finite");
        }
        WarpSpec w(WarpKind::odd_polynomial, 0.0, std::move(coeffs));
        if (std::abs(w.eval_poly(0.0).h1 - 1.0) > 1e-14)
            throw domain_error("odd_polynomial: h'(0) != 1");
        return w;
    }

    WarpKind kind() const { return kind_; }
    double curvature() const { return curvature_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    // Largest radius with h > 0 and, for polynomials, h' > 0 as well.
    double max_radius() const { return max_radius_; }

    WarpDerivs eval(double r) const {
        if (!(r >= 0.0) || r >= max_radius_)
            throw domain_error("warp eval: r outside [0, max_radius)");
        switch (kind_) {
            case WarpKind::euclidean: return {r, 1.0, 0.0};
            case WarpKind::sphere: return {std::sin(r), std::cos(r), -std::sin(r)};
            case WarpKind::hyperbolic: return {std::sinh(r), std::cosh(r), std::sinh(r)};
            case WarpKind::space_form: return eval_space_form(r);
            case WarpKind::odd_polynomial: return eval_poly(r);
        }
        throw domain_error("warp eval: unknown kind");
    }

  private:
    WarpSpec(WarpKind kind, double curvature, std::vector<double> coeffs)
        : kind_(kind), curvature_(curvature), coeffs_(std::move(coeffs)) {
        max_radius_ = compute_max_radius();
    }

    WarpDerivs eval_space_form(double r) const {
        const double k = curvature_;
        if (k > 0.0) {
            const double s = std::sqrt(k);
            return {std::sin(s * r) / s, std::cos(s * r), -s * std::sin(s * r)};
        }
        if (k < 0.0) {
            const double s = std::sqrt(-k);
            return {std::sinh(s * r) / s, std::cosh(s * r), s * std::sinh(s * r)};
        }
        return {r, 1.0, 0.0};
    }

    WarpDerivs eval_poly(double r) const {
        const double r2 = r * r;
        // Horner in r^2 on h/r = 1 + a3 r^2 + ..., then restore the factor r.
        double p = 0.0, p1 = 0.0, p2 = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const double e = 2.0 * i + 3.0;
            p = p * r2 + coeffs_[i];
            p1 = p1 * r2 + e * coeffs_[i];
            p2 = p2 * r2 + e * (e - 1.0) * coeffs_[i];
        }
        return {r + p * r2 * r, 1.0 + p1 * r2, p2 * r};
    }

    double compute_max_radius() const {
        const double inf = std::numeric_limits<double>::infinity();
        switch (kind_) {
            case WarpKind::euclidean:
            case WarpKind::hyperbolic: return inf;
            case WarpKind::sphere: return std::acos(-1.0);
            case WarpKind::space_form:
                return curvature_ > 0.0 ? std::acos(-1.0) / std::sqrt(curvature_) : inf;
            case WarpKind::odd_polynomial: break;
        }
        if (coeffs_.empty()) return inf;
        // First zero of min(h, h') located by geometric scan plus bisection.
        auto worst = [this](double r) {
            const WarpDerivs d = eval_poly(r);
            return std::min(d.h, d.h1);
        };
        double lo = 1e-3;
        if (worst(lo) <= 0.0) return lo;  // degenerate immediately; keep the scan start
        bool bracketed = false;
        double hi = lo;
        const double ratio = std::pow(1e6, 1.0 / 4096.0);
        for (int i = 0; i < 4096; ++i) {
            hi = lo * ratio;
            if (worst(hi) <= 0.0) {
                bracketed = true;
                break;
            }
            lo = hi;
        }
        if (!bracketed) return inf;
        while (hi - lo > 1e-12 * std::max(1.0, hi)) {
            const double mid = 0.5 * (lo + hi);
            (worst(mid) > 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    WarpKind kind_;
    double curvature_;
    std::vector<double> coeffs_;
    double max_radius_;
};

// Warp of the metric rescaled by c^2: h_c(r) = c h(r/c).
inline WarpSpec rescale(const WarpSpec& w, double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw domain_error("rescale: factor must be positive");
    switch (w.kind()) {
        case WarpKind::euclidean: return WarpSpec::euclidean();
        case WarpKind::sphere: return WarpSpec::space_form(1.0 / (c * c));
        case WarpKind::hyperbolic: return WarpSpec::space_form(-1.0 / (c * c));
        case WarpKind::space_form: return WarpSpec::space_form(w.curvature() / (c * c));
        case WarpKind::odd_polynomial: break;
    }
    std::vector<double> coeffs = w.coefficients();
    double scale = 1.0;
    for (double& a : coeffs) {
        scale /= c * c;
        a *= scale;
    }
    return WarpSpec::odd_polynomial(std::move(coeffs));
}

// Grammar: euclidean | sphere | hyperbolic | spaceform:K=<real> | poly:a3=<real>[,a5=<real>,...]
inline WarpSpec parse_warp(const std::string& text) {
    if (text == "euclidean") return WarpSpec::euclidean();
    if (text == "sphere") return WarpSpec::sphere();
    if (text == "hyperbolic") return WarpSpec::hyperbolic();
    const auto parse_real = [](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw domain_error("warp spec: bad number '" + s + "'");
        }
        if (used != s.size()) throw domain_error("warp spec: bad number '" + s + "'");
        return v;
    };
    if (text.rfind("spaceform:", 0) == 0) {
        const std::string body = text.substr(10);
        if (body.rfind("K=", 0) != 0) throw domain_error("warp spec: expected spaceform:K=<real>");
        return WarpSpec::space_form(parse_real(body.substr(2)));
    }
    if (text.rfind("poly:", 0) == 0) {
        std::vector<double> coeffs;
        std::stringstream body(text.substr(5));
        std::string item;
        while (std::getline(body, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || item.size() < 4 || item[0] != 'a')
                throw domain_error("warp spec: expected aN=<real> in '" + item + "'");
            long exp = 0;
            try {
                exp = std::stol(item.substr(1, eq - 1));
            } catch (const std::exception&) {
                throw domain_error("warp spec: bad coefficient name '" + item + "'");
            }
            if (exp < 3 || exp % 2 == 0)
                throw domain_error("warp spec: coefficient index must be odd and >= 3");
            const std::size_t slot = static_cast<std::size_t>((exp - 3) / 2);
            if (slot >= coeffs.size()) coeffs.resize(slot + 1, 0.0);
            coeffs[slot] = parse_real(item.substr(eq + 1));
        }
        if (coeffs.empty()) throw domain_error("warp spec: poly needs at least one coefficient");
        return WarpSpec::odd_polynomial(std::move(coeffs));
    }
    throw domain_error("warp spec: unknown warp '" + text + "'");
}

inline std::string to_string(const WarpSpec& w) {
    std::ostringstream out;
    switch (w.kind()) {
        case WarpKind::euclidean: return "euclidean";
        case WarpKind::sphere: return "sphere";
        case WarpKind::hyperbolic: return "hyperbolic";
        case WarpKind::space_form:
            out << "spaceform:K=" << w.curvature();
            return out.str();
        case WarpKind::odd_polynomial: break;
    }
    out << "poly:";
    const std::vector<double>& c = w.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ',';
        out << 'a' << (2 * i + 3) << '=' << c[i];
    }
    return out.str();
}

}  // namespace steklov
