#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "steklov/bounds.hpp"

using namespace steklov;

namespace {
const double pi = std::acos(-1.0);
}

TEST_CASE("fourth-order bound saturates on the flat ball") {
    const BoundsReport rep = verify_xi_bounds(ManifoldSpec(4, 1.0, WarpSpec::euclidean()), 1);
    REQUIRE(rep.applicable);
    REQUIRE(rep.lower.has_value());
    CHECK(*rep.lower == Catch::Approx(6.0).epsilon(1e-12));
    CHECK(rep.value == Catch::Approx(6.0).epsilon(1e-12));
    CHECK(rep.equality_flag);
}

TEST_CASE("fourth-order bound is strict on the round cap") {
    const BoundsReport rep = verify_xi_bounds(ManifoldSpec(3, pi / 3.0, WarpSpec::sphere()), 1);
    REQUIRE(rep.applicable);
    REQUIRE(rep.lower.has_value());
    const double s = std::sin(pi / 3.0);
    CHECK(*rep.lower == Catch::Approx(5.0 * std::cos(pi / 3.0) / (s * s * s)).epsilon(1e-10));
    CHECK_FALSE(rep.upper.has_value());
    CHECK(rep.value > *rep.lower);
    CHECK_FALSE(rep.equality_flag);
    CHECK(*rep.lower_slack > 0.0);
}

TEST_CASE("fourth-order bounds reverse on the funnel") {
    const BoundsReport rep = verify_xi_bounds(ManifoldSpec(2, 1.0, WarpSpec::hyperbolic()), 1);
    REQUIRE(rep.applicable);
    REQUIRE(rep.lower.has_value());
    REQUIRE(rep.upper.has_value());
    const double sh = std::sinh(1.0);
    CHECK(*rep.lower == Catch::Approx(4.0 / (sh * sh * sh)).epsilon(1e-10));
    CHECK(*rep.upper == Catch::Approx(4.0 * std::cosh(1.0) / (sh * sh * sh)).epsilon(1e-10));
    CHECK(rep.value > *rep.lower);
    CHECK(rep.value < *rep.upper);
}

TEST_CASE("type-two bounds across curvature regimes") {
    const BoundsReport flat = verify_eta_bounds(ManifoldSpec(3, 2.0, WarpSpec::euclidean()), 2);
    REQUIRE(flat.applicable);
    CHECK(*flat.lower == Catch::Approx(3.5).epsilon(1e-12));
    CHECK(*flat.upper == Catch::Approx(3.5).epsilon(1e-12));
    CHECK(flat.value == Catch::Approx(3.5).epsilon(1e-12));
    CHECK(flat.equality_flag);

    const BoundsReport cap = verify_eta_bounds(ManifoldSpec(3, 1.0, WarpSpec::sphere()), 0);
    REQUIRE(cap.applicable);
    const double s = std::sin(1.0);
    CHECK(*cap.lower == Catch::Approx(3.0 * std::cos(1.0) / s).epsilon(1e-10));
    CHECK(*cap.upper == Catch::Approx(3.0 / s).epsilon(1e-10));
    CHECK(cap.value > *cap.lower);
    CHECK(cap.value < *cap.upper);

    const BoundsReport fun = verify_eta_bounds(ManifoldSpec(4, 1.0, WarpSpec::hyperbolic()), 1);
    REQUIRE(fun.applicable);
    const double sh = std::sinh(1.0);
    CHECK(*fun.lower == Catch::Approx(6.0 / sh).epsilon(1e-10));
    CHECK(*fun.upper == Catch::Approx(6.0 * std::cosh(1.0) / sh).epsilon(1e-10));
    CHECK(fun.value > *fun.lower);
    CHECK(fun.value < *fun.upper);

    // In three dimensions the nonpositive regime certifies only the upper
    // side for positive bands; the zeroth band keeps both sides.
    const BoundsReport one_sided =
        verify_eta_bounds(ManifoldSpec(3, 1.0, WarpSpec::hyperbolic()), 1);
    REQUIRE(one_sided.applicable);
    CHECK_FALSE(one_sided.lower.has_value());
    REQUIRE(one_sided.upper.has_value());
    CHECK(one_sided.value < *one_sided.upper);
    CHECK(verify_eta_bounds(ManifoldSpec(3, 1.0, WarpSpec::hyperbolic()), 0).lower.has_value());
}

TEST_CASE("band ratio bound under nonnegative curvature") {
    const BoundsReport flat = verify_eta_ratio(ManifoldSpec(2, 1.0, WarpSpec::euclidean()), 0);
    REQUIRE(flat.applicable);
    CHECK(*flat.lower == Catch::Approx(2.0));
    CHECK(flat.value == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(flat.equality_flag);

    const BoundsReport cap = verify_eta_ratio(ManifoldSpec(2, 1.0, WarpSpec::sphere()), 1);
    REQUIRE(cap.applicable);
    CHECK(*cap.lower == Catch::Approx(6.0 / 4.0));
    CHECK(cap.value > *cap.lower);

    const BoundsReport cap3 = verify_eta_ratio(ManifoldSpec(3, pi / 4.0, WarpSpec::sphere()), 0);
    REQUIRE(cap3.applicable);
    CHECK(*cap3.lower == Catch::Approx(5.0 / 3.0));
    CHECK(cap3.value > *cap3.lower);

    // The ratio bound needs nonnegative curvature.
    CHECK_FALSE(verify_eta_ratio(ManifoldSpec(3, 1.0, WarpSpec::hyperbolic()), 0).applicable);
}

TEST_CASE("checks refuse a concave boundary") {
    const ManifoldSpec past_equator(2, 2.0, WarpSpec::sphere());
    CHECK_FALSE(verify_xi_bounds(past_equator, 1).applicable);
    CHECK_FALSE(verify_eta_bounds(past_equator, 0).applicable);
    CHECK_FALSE(verify_eta_ratio(past_equator, 0).applicable);
}

TEST_CASE("slack closes as the warp flattens") {
    double prev = std::numeric_limits<double>::infinity();
    for (double eps : {1e-2, 1e-3, 1e-4}) {
        const ManifoldSpec man(3, 1.0, WarpSpec::odd_polynomial({eps / 6.0}));
        const BoundsReport rep = verify_eta_bounds(man, 0);
        REQUIRE(rep.applicable);
        REQUIRE(rep.upper_slack.has_value());
        CHECK(*rep.upper_slack >= 0.0);
        CHECK(*rep.upper_slack < prev);
        prev = *rep.upper_slack;
    }
    CHECK(prev <= 1e-4);
}

TEST_CASE("admissible sampler is deterministic and in-regime") {
    std::mt19937_64 a(42), b(42);
    const ManifoldSpec ma = sample_admissible_manifold(3, a);
    const ManifoldSpec mb = sample_admissible_manifold(3, b);
    CHECK(ma.R == mb.R);
    CHECK(ma.warp.coefficients() == mb.warp.coefficients());
    const HypothesisReport hyp = check_hypotheses(ma);
    CHECK(hyp.lemma1_holds);
    CHECK(hyp.convex_boundary);
}

TEST_CASE("fuzzing never observes a violated certificate") {
    const auto reports = fuzz_bounds(3, 3, 100, 7);
    REQUIRE(reports.size() == 100);
    for (const BoundsReport& r : reports) {
        REQUIRE(r.applicable);
        const double scale = std::max(std::abs(r.value), 1e-300);
        if (r.lower_slack) CHECK(*r.lower_slack / scale >= -1e-8);
        if (r.upper_slack) CHECK(*r.upper_slack / scale >= -1e-8);
    }

    // Reproducible across calls with the same seed.
    const auto again = fuzz_bounds(2, 2, 5, 1);
    const auto again2 = fuzz_bounds(2, 2, 5, 1);
    REQUIRE(again.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(again[i].value == again2[i].value);
        CHECK(again[i].check == again2[i].check);
    }

    CHECK(fuzz_bounds(2, 1, 0, 9).empty());
    CHECK_THROWS_AS(fuzz_bounds(1, 2, 10, 0), domain_error);
}
