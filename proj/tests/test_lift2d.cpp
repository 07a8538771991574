#include <doctest.h>

#include <cmath>

#include "flowdepth/lift2d.hpp"

using namespace flowdepth;

TEST_CASE("cutoff profile plateaus and support") {
    CHECK(cutoff_eta(0.0) == 1.0);
    CHECK(cutoff_eta(1.0) == 1.0);
    CHECK(cutoff_eta(1.5) == 0.0);
    CHECK(cutoff_eta(2.0) == 0.0);
    CHECK(cutoff_eta(1.25) > 0.0);
    CHECK(cutoff_eta(1.25) < 1.0);
}

TEST_CASE("flow at time zero is the identity") {
    LiftConfig cfg = make_lift_config("quad", -1.0, 1.0, 0.5, 0.3);
    Vec2 p{0.3, -0.2};
    Vec2 q = lift_flow(cfg, 0.0, p);
    CHECK(q[0] == p[0]);
    CHECK(q[1] == p[1]);
}

TEST_CASE("points outside the support never move") {
    LiftConfig cfg = make_lift_config("quad", -1.0, 1.0, 0.5, 0.3);
    Vec2 p{1.8, 0.0};
    for (double t : {0.2, 1.0}) {
        Vec2 q = lift_flow(cfg, t, p);
        CHECK(q[0] == p[0]);
        CHECK(q[1] == p[1]);
    }
}

TEST_CASE("straight-line flow inside the unit ball") {
    // starting at (0.4, 0): the cutoff is 1 along the whole vertical segment,
    // so time 1 moves the point by exactly kappa * f(0.4 / lambda)
    LiftConfig cfg = make_lift_config("quad", -1.0, 1.0, 0.5, 0.3);
    Vec2 out = lift_flow(cfg, 1.0, {0.4, 0.0});
    CHECK(std::abs(out[0] - 0.4) <= 1e-10);
    CHECK(std::abs(out[1] - 0.3 * 0.64) <= 1e-8);
}

TEST_CASE("factorization reproduces the targets") {
    LiftReport zero = verify_factorization(make_lift_config("zero", -1.0, 1.0, 0.5, 0.3), 100);
    CHECK(zero.sup_error == 0.0);

    LiftReport quad = verify_factorization(make_lift_config("quad", -1.0, 1.0, 0.5, 0.3), 1000);
    CHECK(quad.sup_error < 1e-7);
    CHECK(quad.segment_margin > 0.1);

    LiftReport sin3 = verify_factorization(make_lift_config("sin3", -1.0, 1.0, 0.5, 0.2), 1000);
    CHECK(sin3.sup_error < 1e-7);
    CHECK(sin3.segment_margin > 0.1);
}

TEST_CASE("violated segment condition is a hard error") {
    LiftConfig cfg = make_lift_config("quad", -1.0, 1.0, 0.9, 0.9);
    CHECK(segment_margin(cfg) <= 0.0);
    CHECK_THROWS_AS(verify_factorization(cfg, 100), ConfigViolation);
}

TEST_CASE("parallel and serial verification agree bitwise") {
    LiftConfig cfg = make_lift_config("sin3", -1.0, 1.0, 0.5, 0.2);
    LiftReport p = verify_factorization(cfg, 300);
    LiftReport s = verify_factorization_serial(cfg, 300);
    CHECK(p.sup_error == s.sup_error);
    CHECK(p.segment_margin == s.segment_margin);
}

TEST_CASE("backward integration recovers the start point") {
    LiftConfig cfg = make_lift_config("sin3", -1.0, 1.0, 0.5, 0.2);
    for (double u : {-0.9, -0.3, 0.2, 0.8}) {
        Vec2 p{0.5 * u, 0.1};
        Vec2 fwd = lift_flow(cfg, 1.0, p);
        Vec2 back = lift_flow_reversed(cfg, 1.0, fwd);
        CHECK(std::hypot(back[0] - p[0], back[1] - p[1]) <= 1e-7);
    }
}
