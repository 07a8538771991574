#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "flowdepth/relu1d.hpp"

using namespace flowdepth;

namespace {
constexpr double kE = std::numbers::e;

Perturbation hump() {
    return {[](double x) { return x * (1.0 - x); }, [](double x) { return 1.0 - 2.0 * x; }};
}
}  // namespace

TEST_CASE("local norm of the parabola hump") {
    SmoothMap id = make_map("identity");
    CHECK(local_norm(hump(), id) == doctest::Approx(2.0).epsilon(1e-9));
    Perturbation zero{[](double) { return 0.0; }, [](double) { return 0.0; }};
    CHECK(local_norm(zero, id) == 0.0);

    // Against exp_map: u'/psi' = (1-2x)(e-1)e^{-x} is monotone decreasing, so
    // TV = g(0) - g(1) = e - 1/e. Cross-checked by a 2^16-grid sample oracle.
    SmoothMap em = make_map("exp_map");
    double closed = kE - 1.0 / kE;
    double oracle = tv_of_samples(GridFunction::sample(
        [](double x) { return (1.0 - 2.0 * x) * (kE - 1.0) * std::exp(-x); }, 1 << 16));
    CHECK(closed == doctest::Approx(oracle).epsilon(1e-6));
    CHECK(local_norm(hump(), em) == doctest::Approx(closed).epsilon(1e-4));
}

TEST_CASE("local norm rejects nonzero boundary values") {
    SmoothMap id = make_map("identity");
    Perturbation bad{[](double x) { return x; }, [](double) { return 1.0; }};
    CHECK_THROWS_AS(local_norm(bad, id), BoundaryViolation);
}

TEST_CASE("complexity closed forms") {
    CHECK(complexity(make_map("identity")) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(complexity(MonotonePwl::identity()) == 0.0);
    // TV of ln(eps+2x)/(1+eps) over [0,1] is ln(1 + 2/eps); eps = 1 gives ln 3
    CHECK(complexity(make_map("eps_quad:1")) == doctest::Approx(std::log(3.0)).epsilon(1e-8));
    // oscillating map: closed form 2 ln 3 via the substitution oracle, and at
    // least the 2n/3 lower bound
    double c = complexity(make_map("osc:2"));
    CHECK(c == doctest::Approx(2.0 * std::log(3.0)).epsilon(1e-6));
    CHECK(c >= 4.0 / 3.0);
}

TEST_CASE("distance closed forms") {
    SmoothMap id = make_map("identity");
    SmoothMap em = make_map("exp_map");
    CHECK(distance(em, em) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(distance(id, em) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(distance(id, make_map("fig1")) ==
          doctest::Approx(2.0 * std::log(9.0 / 5.0)).epsilon(1e-4));
}

TEST_CASE("legacy bound evaluates endpoint slopes from the registry") {
    CHECK(legacy_upper_bound(make_map("identity")) == doctest::Approx(0.0).epsilon(1e-9));
    // exp_map: TV = 1, |ln psi'(0)| = ln(e-1), |ln psi'(1)| = 1 - ln(e-1)
    CHECK(legacy_upper_bound(make_map("exp_map")) == doctest::Approx(2.0).epsilon(1e-8));
    // eps_quad(1): ln 3 + ln 2 + ln(3/2) = ln 9
    CHECK(legacy_upper_bound(make_map("eps_quad:1")) ==
          doctest::Approx(std::log(9.0)).epsilon(1e-8));
    for (const char* name : {"exp_map", "eps_quad:1", "osc:2", "fig1"}) {
        SmoothMap m = make_map(name);
        CHECK(complexity(m) <= legacy_upper_bound(m) + 1e-9);
    }
}

TEST_CASE("geodesic endpoints and the closed-form midpoint") {
    SmoothMap id = make_map("identity");
    SmoothMap em = make_map("exp_map");
    const int n = 1 << 14;

    MonotonePwl g0 = geodesic_point(id, em, 0.0, n);
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        double x = i / 2000.0;
        worst = std::max(worst, std::abs(g0(x) - x));
    }
    CHECK(worst <= 1e-8);

    // closed form gamma_t(x) = (e^{tx}-1)/(e^t-1)
    MonotonePwl gh = geodesic_point(id, em, 0.5, n);
    double expect = (std::exp(0.25) - 1.0) / (std::exp(0.5) - 1.0);
    CHECK(gh(0.5) == doctest::Approx(expect).epsilon(1e-6));

    MonotonePwl p1 = to_pwl(em, 256);
    MonotonePwl same = geodesic_point(p1, p1, 0.37, 64);
    double worst2 = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        double x = i / 2000.0;
        worst2 = std::max(worst2, std::abs(same(x) - p1(x)));
    }
    CHECK(worst2 <= 1e-10);
}

TEST_CASE("geodesic length approximates the distance") {
    SmoothMap id = make_map("identity");
    SmoothMap em = make_map("exp_map");
    CHECK(geodesic_length(em, em, 8, 256) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(geodesic_length(id, em, 64, 4096) == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(geodesic_length(id, make_map("fig1"), 64, 1 << 14) ==
          doctest::Approx(2.0 * std::log(9.0 / 5.0)).epsilon(2e-2));

    MonotonePwl p1 = to_pwl(id, 512), p2 = to_pwl(em, 512);
    CHECK(geodesic_length(p1, p2, 32, 512) ==
          doctest::Approx(distance(p1, p2)).epsilon(2e-2));
}

TEST_CASE("geodesic speed property on sampled pairs") {
    const int n = 4096;
    MonotonePwl p1 = to_pwl(make_map("identity"), n);
    MonotonePwl p2 = to_pwl(make_map("exp_map"), n);
    double d = distance(p1, p2);
    for (double t : {0.25, 0.5, 0.75}) {
        MonotonePwl gt = geodesic_point(p1, p2, t, n);
        CHECK(distance(p1, gt) == doctest::Approx(t * d).epsilon(1e-3));
    }
}

TEST_CASE("sampled distance: secant log-slope jumps") {
    SmoothMap id = make_map("identity");
    SmoothMap em = make_map("exp_map");

    SampledPair same = SampledPair::uniform(id, id, 9);
    CHECK(sampled_distance(same) == 0.0);

    // m = 5 uniform nodes: secant slopes geometric with ratio e^{1/4}
    CHECK(sampled_distance(SampledPair::uniform(id, em, 5)) ==
          doctest::Approx(0.75).epsilon(1e-12));

    // m nodes: (m-2)/(m-1), approaching the distance 1 with gap <= 2/m
    for (int m : {8, 32, 128, 1024}) {
        double got = sampled_distance(SampledPair::uniform(id, em, m));
        double expect = static_cast<double>(m - 2) / (m - 1);
        CHECK(got == doctest::Approx(expect).epsilon(1e-10));
        CHECK(1.0 - got <= 2.0 / m);
    }
}

TEST_CASE("direct minimization never beats the secant closed form") {
    // Oracle: minimize TV(ln phi') over piecewise-linear interpolants phi with
    // phi(x_i) = y_i, the node cells refined by random extra breakpoints, via
    // projected subgradient on the log-slopes. The iteration starts at the
    // per-cell secant interpolant, whose objective is exactly the closed form,
    // and must never descend below it.
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> md(3, 8), rd(1, 3);
    std::uniform_real_distribution<double> ud(0.05, 0.95);

    auto random_nodes = [&](int m) {
        std::vector<double> v{0.0, 1.0};
        for (int i = 0; i < m - 2; ++i) v.push_back(ud(rng));
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i + 1] - v[i] < 1e-3) v[i + 1] = v[i] + 1e-3;
        v.back() = 1.0;
        return v;
    };

    for (int inst = 0; inst < 10; ++inst) {
        int m = md(rng);
        std::vector<double> z(m), x = random_nodes(m), y = random_nodes(m);
        for (int i = 0; i < m; ++i) z[i] = static_cast<double>(i) / (m - 1);
        SampledPair pair(z, x, y);
        double closed = sampled_distance(pair);

        // subcell widths and per-cell displacement targets
        std::vector<double> widths, targets;
        std::vector<int> cell_of;
        for (int i = 0; i + 1 < m; ++i) {
            int extra = rd(rng);
            std::vector<double> cuts{x[i], x[i + 1]};
            for (int e = 0; e < extra; ++e)
                cuts.push_back(x[i] + (x[i + 1] - x[i]) * ud(rng));
            std::sort(cuts.begin(), cuts.end());
            for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
                widths.push_back(cuts[j + 1] - cuts[j]);
                cell_of.push_back(i);
            }
            targets.push_back(y[i + 1] - y[i]);
        }
        const std::size_t n = widths.size();
        std::vector<double> ell(n);
        for (std::size_t j = 0; j < n; ++j) {
            int c = cell_of[j];
            ell[j] = std::log((y[c + 1] - y[c]) / (x[c + 1] - x[c]));
        }
        auto objective = [&](const std::vector<double>& l) {
            double acc = 0.0;
            for (std::size_t j = 0; j + 1 < n; ++j) acc += std::abs(l[j + 1] - l[j]);
            return acc;
        };
        auto project = [&](std::vector<double>& l) {
            // rescale each cell's slopes so the displacement constraint holds
            std::vector<double> mass(targets.size(), 0.0);
            for (std::size_t j = 0; j < n; ++j) mass[cell_of[j]] += widths[j] * std::exp(l[j]);
            for (std::size_t j = 0; j < n; ++j)
                l[j] += std::log(targets[cell_of[j]] / mass[cell_of[j]]);
        };
        double best = objective(ell);
        CHECK(best == doctest::Approx(closed).epsilon(1e-12));
        std::vector<double> cur = ell;
        std::normal_distribution<double> jitter(0.0, 1.0);
        for (int it = 1; it <= 2000; ++it) {
            std::vector<double> g(n, 0.0);
            for (std::size_t j = 0; j + 1 < n; ++j) {
                double s = cur[j + 1] - cur[j] > 0.0 ? 1.0 : -1.0;
                g[j + 1] += s;
                g[j] -= s;
            }
            double step = 0.2 / std::sqrt(static_cast<double>(it));
            for (std::size_t j = 0; j < n; ++j)
                g[j] += 0.1 * jitter(rng);  // explore away from the start
            for (std::size_t j = 0; j < n; ++j) cur[j] -= step * g[j];
            project(cur);
            best = std::min(best, objective(cur));
        }
        CHECK(best >= closed - 1e-6);
    }
}

TEST_CASE("sampled distance validates monotonicity") {
    CHECK_THROWS_AS(SampledPair({0.0, 0.6, 0.4, 1.0}, {0.0, 0.5, 0.6, 1.0},
                                {0.0, 0.5, 0.6, 1.0}),
                    NonMonotoneSamples);
}

TEST_CASE("discrete local norm dispatches to the closed form on uniform nodes") {
    MonotonePwl id = MonotonePwl::identity();
    std::vector<double> z{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> zero(5, 0.0);
    CHECK(discrete_local_norm(zero, id, z) == 0.0);

    std::vector<double> hump_vals(5);
    for (int i = 0; i < 5; ++i) hump_vals[i] = z[i] * (1.0 - z[i]);
    CHECK(discrete_local_norm(hump_vals, id, z) == doctest::Approx(1.5).epsilon(1e-12));

    // densifying nodes: converges to the local norm 2 from below, nondecreasing
    double prev = 0.0;
    for (int m : {5, 9, 17, 33, 65}) {
        std::vector<double> zz(m), vv(m);
        for (int i = 0; i < m; ++i) {
            zz[i] = static_cast<double>(i) / (m - 1);
            vv[i] = zz[i] * (1.0 - zz[i]);
        }
        double val = discrete_local_norm(vv, id, zz);
        CHECK(val >= prev - 1e-12);
        CHECK(val <= 2.0 + 1e-12);
        prev = val;
    }
    CHECK(prev == doctest::Approx(2.0).epsilon(1e-1));
}

TEST_CASE("discrete local norm uses the LP on transported nodes") {
    // a genuinely non-uniform transport
    MonotonePwl psi({0.0, 0.5, 1.0}, {0.0, 0.25, 1.0});
    std::vector<double> z{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> vals(5);
    for (int i = 0; i < 5; ++i) vals[i] = z[i] * (1.0 - z[i]);
    double val = discrete_local_norm(vals, psi, z);
    CHECK(val > 0.0);
    CHECK(std::isfinite(val));
}
