#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "steklov/hypotheses.hpp"
#include "steklov/manifold.hpp"
#include "steklov/warp.hpp"

using namespace steklov;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("round warp values and degeneracy radius") {
    const WarpSpec w = WarpSpec::sphere();
    const WarpDerivs d = w.eval(0.5 * pi);
    CHECK(d.h == Catch::Approx(1.0));
    CHECK(d.h1 == Catch::Approx(0.0).margin(1e-15));
    CHECK(d.h2 == Catch::Approx(-1.0));
    CHECK(w.max_radius() == Catch::Approx(pi).margin(1e-9));

    const WarpDerivs t = w.eval(pi / 3.0);
    CHECK(t.h == Catch::Approx(std::sqrt(3.0) / 2.0));
    CHECK(t.h1 == Catch::Approx(0.5));
    CHECK(t.h2 == Catch::Approx(-std::sqrt(3.0) / 2.0));
}

TEST_CASE("model warps satisfy their defining equations") {
    // h'' = -K h holds exactly for the trig and hyperbolic models.
    const WarpSpec s = WarpSpec::sphere();
    const WarpSpec h = WarpSpec::hyperbolic();
    for (double r : {0.3, 1.0, 2.2}) {
        CHECK(s.eval(r).h2 == -s.eval(r).h);
        CHECK(h.eval(r).h2 == h.eval(r).h);
    }
    const WarpDerivs origin = h.eval(0.0);
    CHECK(origin.h == 0.0);
    CHECK(origin.h1 == 1.0);
    CHECK(origin.h2 == 0.0);
    CHECK(h.max_radius() == std::numeric_limits<double>::infinity());
}

TEST_CASE("flat warp and the zero-curvature space form coincide") {
    const WarpSpec flat = WarpSpec::euclidean();
    const WarpSpec zero = WarpSpec::space_form(0.0);
    for (double r : {0.1, 1.0, 7.5}) {
        CHECK(flat.eval(r).h == r);
        CHECK(flat.eval(r).h1 == 1.0);
        CHECK(flat.eval(r).h2 == 0.0);
        CHECK(zero.eval(r).h == r);
    }
}

TEST_CASE("unit space forms reduce to the model warps") {
    const WarpSpec sp = WarpSpec::space_form(1.0);
    const WarpSpec sm = WarpSpec::space_form(-1.0);
    for (double r : {0.2, 0.9, 2.8}) {
        CHECK(sp.eval(r).h == WarpSpec::sphere().eval(r).h);
        CHECK(sp.eval(r).h2 == WarpSpec::sphere().eval(r).h2);
        CHECK(sm.eval(r).h == WarpSpec::hyperbolic().eval(r).h);
        CHECK(sm.eval(r).h2 == WarpSpec::hyperbolic().eval(r).h2);
    }
    // General K: h = sin(sqrt(K) r)/sqrt(K).
    const WarpSpec k4 = WarpSpec::space_form(4.0);
    CHECK(k4.eval(0.6).h == Catch::Approx(0.5 * std::sin(1.2)));
    CHECK(k4.eval(0.6).h1 == Catch::Approx(std::cos(1.2)));
    CHECK(k4.max_radius() == Catch::Approx(pi / 2.0).margin(1e-9));
}

TEST_CASE("odd polynomial warp evaluates its derivatives") {
    const WarpSpec w = WarpSpec::odd_polynomial({-1.0 / 6.0});
    CHECK(w.eval(1.0).h == Catch::Approx(1.0 - 1.0 / 6.0));
    CHECK(w.eval(0.5).h1 == Catch::Approx(1.0 - 0.5 * 0.25));
    CHECK(w.eval(0.5).h2 == Catch::Approx(-0.5));
    // h' = 1 - r^2/2 vanishes first, at sqrt(2).
    CHECK(w.max_radius() == Catch::Approx(std::sqrt(2.0)).margin(1e-6));

    const WarpSpec two = WarpSpec::odd_polynomial({-0.2, 0.01});
    for (double r : {0.3, 0.8}) {
        const double h = r - 0.2 * r * r * r + 0.01 * r * r * r * r * r;
        const double h1 = 1.0 - 0.6 * r * r + 0.05 * r * r * r * r;
        const double h2 = -1.2 * r + 0.2 * r * r * r;
        CHECK(two.eval(r).h == Catch::Approx(h).epsilon(1e-14));
        CHECK(two.eval(r).h1 == Catch::Approx(h1).epsilon(1e-14));
        CHECK(two.eval(r).h2 == Catch::Approx(h2).epsilon(1e-14));
    }
    // Positive leading coefficient keeps h and h' positive forever.
    CHECK(WarpSpec::odd_polynomial({0.25}).max_radius() ==
          std::numeric_limits<double>::infinity());
}

TEST_CASE("evaluation outside the warp domain throws") {
    CHECK_THROWS_AS(WarpSpec::sphere().eval(-0.1), domain_error);
    CHECK_THROWS_AS(WarpSpec::sphere().eval(pi), domain_error);
    CHECK_THROWS_AS(WarpSpec::odd_polynomial({-1.0 / 6.0}).eval(1.5), domain_error);
    CHECK_NOTHROW(WarpSpec::hyperbolic().eval(50.0));
}

TEST_CASE("rescaled warp satisfies h_c(r) = c h(r/c)") {
    for (double c : {0.5, 2.0, 10.0}) {
        const WarpSpec base[] = {WarpSpec::sphere(), WarpSpec::hyperbolic(),
                                 WarpSpec::odd_polynomial({-0.15, 0.02})};
        for (const WarpSpec& w : base) {
            const WarpSpec scaled = rescale(w, c);
            for (double r : {0.2, 0.7}) {
                const WarpDerivs a = scaled.eval(c * r);
                const WarpDerivs b = w.eval(r);
                CHECK(a.h == Catch::Approx(c * b.h).epsilon(1e-14));
                CHECK(a.h1 == Catch::Approx(b.h1).epsilon(1e-14));
                CHECK(a.h2 == Catch::Approx(b.h2 / c).epsilon(1e-14));
            }
            CHECK(scaled.max_radius() == Catch::Approx(c * w.max_radius()).epsilon(1e-9));
        }
    }
}

TEST_CASE("warp grammar parses and round-trips") {
    CHECK(parse_warp("euclidean").kind() == WarpKind::euclidean);
    CHECK(parse_warp("sphere").kind() == WarpKind::sphere);
    CHECK(parse_warp("hyperbolic").kind() == WarpKind::hyperbolic);

    const WarpSpec sf = parse_warp("spaceform:K=-0.5");
    CHECK(sf.kind() == WarpKind::space_form);
    CHECK(sf.eval(1.0).h == Catch::Approx(std::sinh(1.0 / std::sqrt(2.0)) * std::sqrt(2.0)));

    const WarpSpec p = parse_warp("poly:a3=-0.1,a5=0.02");
    CHECK(p.kind() == WarpKind::odd_polynomial);
    CHECK(p.coefficients().size() == 2);
    CHECK(p.coefficients()[0] == -0.1);
    CHECK(p.coefficients()[1] == 0.02);

    for (const char* s : {"euclidean", "sphere", "hyperbolic", "spaceform:K=2.5",
                          "poly:a3=-0.1,a5=0.02", "poly:a5=0.01"}) {
        const WarpSpec w = parse_warp(s);
        const WarpSpec again = parse_warp(to_string(w));
        CHECK(again.kind() == w.kind());
        for (double r : {0.05, 0.2})
            CHECK(again.eval(r).h == Catch::Approx(w.eval(r).h).epsilon(1e-12));
    }

    CHECK_THROWS_AS(parse_warp("parabolic"), domain_error);
    CHECK_THROWS_AS(parse_warp("poly:"), domain_error);
    CHECK_THROWS_AS(parse_warp("poly:a4=1"), domain_error);
    CHECK_THROWS_AS(parse_warp("spaceform:K=abc"), domain_error);
    CHECK_THROWS_AS(parse_warp("poly:a3=1x"), domain_error);
}

TEST_CASE("manifold validation") {
    CHECK_THROWS_AS(ManifoldSpec(1, 1.0, WarpSpec::euclidean()), domain_error);
    CHECK_THROWS_AS(ManifoldSpec(3, 0.0, WarpSpec::euclidean()), domain_error);
    CHECK_THROWS_AS(ManifoldSpec(3, pi, WarpSpec::sphere()), domain_error);
    CHECK_NOTHROW(ManifoldSpec(3, 3.1, WarpSpec::sphere()));
    CHECK(tau(3, 2) == 6.0);
    CHECK(tau(2, 5) == 25.0);
    CHECK(tau(4, 0) == 0.0);
}

TEST_CASE("curvature sign and convexity report") {
    const HypothesisReport round = check_hypotheses(ManifoldSpec(3, pi / 3.0, WarpSpec::sphere()));
    CHECK(round.ricci_nonneg);
    CHECK_FALSE(round.ricci_nonpos);
    CHECK(round.convex_boundary);
    CHECK(round.lemma1_holds);

    const HypothesisReport hyp = check_hypotheses(ManifoldSpec(3, 1.0, WarpSpec::hyperbolic()));
    CHECK_FALSE(hyp.ricci_nonneg);
    CHECK(hyp.ricci_nonpos);
    CHECK(hyp.convex_boundary);
    CHECK_FALSE(hyp.lemma1_holds);

    const HypothesisReport flat = check_hypotheses(ManifoldSpec(4, 2.0, WarpSpec::euclidean()));
    CHECK(flat.ricci_nonneg);
    CHECK(flat.ricci_nonpos);
    CHECK(flat.convex_boundary);
    CHECK(flat.lemma1_holds);
    CHECK(flat.worst_margin == 0.0);

    // Past the equator the boundary turns concave.
    CHECK_FALSE(check_hypotheses(ManifoldSpec(2, 2.0, WarpSpec::sphere())).convex_boundary);

    CHECK_THROWS_AS(check_hypotheses(ManifoldSpec(2, 1.0, WarpSpec::sphere()), 8), domain_error);
}

TEST_CASE("deviation from the flat warp") {
    CHECK(max_deviation_from_flat(ManifoldSpec(3, 2.0, WarpSpec::euclidean())) == 0.0);
    const double dev = max_deviation_from_flat(ManifoldSpec(2, 1.0, WarpSpec::sphere()));
    CHECK(dev == Catch::Approx(1.0 - std::cos(1.0)).epsilon(1e-6));
}
