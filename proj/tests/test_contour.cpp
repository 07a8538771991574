#include <doctest.h>

#include <cmath>
#include <numbers>

#include "flowdepth/contour.hpp"
#include "flowdepth/relu1d.hpp"

using namespace flowdepth;

namespace {
constexpr double kPi = std::numbers::pi;

// By sine orthogonality over full periods, the L2 distance of the
// barycentric combination to the identity has the closed form
// sqrt(((a-c)^2 + (b-c)^2)/2) / (7 pi).
double l2_closed_form(double a, double b, double c) {
    return std::sqrt(((a - c) * (a - c) + (b - c) * (b - c)) / 2.0) / (7.0 * kPi);
}
}  // namespace

TEST_CASE("the simplex center is the identity map") {
    SmoothMap center = barycentric_map(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
    for (int i = 0; i <= 100; ++i) {
        double x = i / 100.0;
        CHECK(std::abs(center.f(x) - x) <= 1e-15);
    }
    CHECK(complexity(center) <= 1e-9);
    CHECK(l2_to_identity(center, 4096) <= 1e-12);
}

TEST_CASE("l2 field against the orthogonality closed form") {
    for (auto [a, b] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}, {0.3, 0.2},
                        {0.5, 0.1}, {0.25, 0.5}}) {
        double c = 1.0 - a - b;
        SmoothMap m = barycentric_map(a, b, c);
        CHECK(std::abs(l2_to_identity(m, 4096) - l2_closed_form(a, b, c)) <= 1e-8);
    }
}

TEST_CASE("vertex of the flow field matches the wave distance") {
    auto rows = contour_field(5, ContourMetric::Flow, 2048);
    bool found = false;
    for (const auto& r : rows) {
        if (r.a == 1.0) {
            CHECK(r.value == doctest::Approx(2.0 * std::log(9.0 / 5.0)).epsilon(1e-3));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("flow and l2 fields order the simplex differently") {
    auto flow = contour_field(8, ContourMetric::Flow, 2048);
    auto l2 = contour_field(8, ContourMetric::L2, 2048);
    std::vector<double> fv, lv;
    for (std::size_t i = 0; i < flow.size(); ++i) {
        fv.push_back(flow[i].value);
        lv.push_back(l2[i].value);
    }
    double corr = rank_correlation(fv, lv);
    CHECK(corr > 0.0);   // both grow away from the center
    CHECK(corr < 0.99);  // but with visibly different level sets
}
