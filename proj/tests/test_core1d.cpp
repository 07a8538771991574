#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "flowdepth/core1d.hpp"
#include "flowdepth/registry.hpp"

using namespace flowdepth;

namespace {
constexpr double kPi = std::numbers::pi;

MonotonePwl three_point() {
    return MonotonePwl({0.0, 0.5, 1.0}, {0.0, 0.25, 1.0});
}
}  // namespace

TEST_CASE("tv_of_samples on monotone samples equals the range") {
    CHECK(tv_of_samples(GridFunction::sample([](double x) { return x; }, 10)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tv_of_samples(GridFunction::sample([](double x) { return 1.0 - 2.0 * x; }, 100)) ==
          doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("tv_of_samples matches the closed form for the wave log-slope") {
    // d/dx ln(1 + (2/7)cos 2pi x) changes sign once; the total variation is
    // twice the log-range: 2 ln(9/5).
    auto g = [](double x) { return std::log(1.0 + (2.0 / 7.0) * std::cos(2.0 * kPi * x)); };
    double tv16 = tv_of_samples(GridFunction::sample(g, 1 << 16));
    CHECK(tv16 == doctest::Approx(2.0 * std::log(9.0 / 5.0)).epsilon(1e-4));
}

TEST_CASE("tv_of_samples is nondecreasing under dyadic refinement") {
    auto g = [](double x) { return std::sin(3.0 * kPi * x) + 0.2 * std::cos(9.0 * kPi * x); };
    double prev = 0.0;
    for (int n = 8; n <= 4096; n *= 2) {
        double cur = tv_of_samples(GridFunction::sample(g, n));
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }
}

TEST_CASE("log_slope values") {
    StepFunction id = MonotonePwl::identity().log_slope();
    REQUIRE(id.values.size() == 1);
    CHECK(id.values[0] == 0.0);

    StepFunction ls = three_point().log_slope();
    REQUIRE(ls.values.size() == 2);
    CHECK(ls.values[0] == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(ls.values[1] == doctest::Approx(std::log(1.5)).epsilon(1e-15));
}

TEST_CASE("log_slope of the sampled exponential map has uniform increments") {
    // Four uniform cells: slopes proportional to e^{i/4}, log increments 1/4.
    MonotonePwl pwl = to_pwl(make_map("exp_map"), 4);
    StepFunction ls = pwl.log_slope();
    REQUIRE(ls.values.size() == 4);
    for (int i = 0; i + 1 < 4; ++i)
        CHECK(ls.values[i + 1] - ls.values[i] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("log_slope rejects flat segments") {
    MonotonePwl flat({0.0, 0.5, 1.0}, {0.0, 0.0, 1.0});
    CHECK_THROWS_AS(flat.log_slope(), NonPositiveSlope);
}

TEST_CASE("tv_step_difference is the exact jump sum of the difference") {
    StepFunction zero{{0.0, 1.0}, {0.0}};
    StepFunction a = three_point().log_slope();
    CHECK(tv_step_difference(a, a) == 0.0);
    // one interior jump: |ln(3/2) - ln(1/2)| = ln 3
    CHECK(tv_step_difference(a, zero) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    // exponential map on four uniform cells: three interior jumps of 1/4
    StepFunction b = to_pwl(make_map("exp_map"), 4).log_slope();
    CHECK(tv_step_difference(b, zero) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("compose with the identity is the identity operation") {
    MonotonePwl psi = three_point();
    MonotonePwl id = MonotonePwl::identity();
    for (int i = 0; i <= 1000; ++i) {
        double x = i / 1000.0;
        CHECK(compose(psi, id)(x) == doctest::Approx(psi(x)).epsilon(1e-15));
        CHECK(compose(id, psi)(x) == doctest::Approx(psi(x)).epsilon(1e-15));
    }
}

TEST_CASE("self-composition against the pointwise oracle") {
    MonotonePwl psi = three_point();
    MonotonePwl sq = compose(psi, psi);
    // kinks where the inner map crosses the outer breakpoint: psi(x) = 1/2 at x = 2/3
    REQUIRE(sq.xs().size() == 4);
    CHECK(sq.xs()[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(sq.xs()[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    auto slopes = sq.slopes();
    CHECK(slopes[0] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(slopes[1] == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(slopes[2] == doctest::Approx(2.25).epsilon(1e-13));
    CHECK(sq(0.5) == doctest::Approx(0.125).epsilon(1e-14));
    double worst = 0.0;
    for (int i = 0; i <= 100000; ++i) {
        double x = i / 100000.0;
        worst = std::max(worst, std::abs(sq(x) - psi(psi(x))));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("degenerate segments are rejected at construction") {
    CHECK_THROWS_AS(MonotonePwl({0.0, 0.5, 0.5, 1.0}, {0.0, 0.2, 0.4, 1.0}), DegenerateSegment);
    CHECK_THROWS_AS(MonotonePwl({0.0, 0.5, 0.75, 1.0}, {0.0, 0.6, 0.4, 1.0}),
                    NonMonotoneSamples);
    CHECK_THROWS_AS(MonotonePwl({0.1, 1.0}, {0.0, 1.0}), BoundaryViolation);
}

TEST_CASE("every registry map is a diffeomorphism fixing the endpoints") {
    for (const auto& name : registry_names()) {
        SmoothMap m = make_map(name);
        CAPTURE(name);
        CHECK(std::abs(m.f(0.0)) <= 1e-12);
        CHECK(std::abs(m.f(1.0) - 1.0) <= 1e-12);
        double min_slope = 1e300;
        for (int i = 0; i <= 10000; ++i) min_slope = std::min(min_slope, m.d1(i / 10000.0));
        CHECK(min_slope > 0.0);
    }
}

TEST_CASE("csv round trip") {
    MonotonePwl psi = three_point();
    std::stringstream buf;
    write_csv(buf, psi);
    MonotonePwl back = read_pwl_csv(buf);
    REQUIRE(back.xs().size() == psi.xs().size());
    for (std::size_t i = 0; i < psi.xs().size(); ++i) {
        CHECK(back.xs()[i] == psi.xs()[i]);
        CHECK(back.ys()[i] == psi.ys()[i]);
    }

    GridFunction g = GridFunction::sample([](double x) { return x * (1.0 - x); }, 16);
    std::stringstream buf2;
    write_csv(buf2, g);
    GridFunction gback = read_grid_csv(buf2);
    REQUIRE(gback.n == g.n);
    for (int i = 0; i <= g.n; ++i) CHECK(gback.values[i] == g.values[i]);
}
