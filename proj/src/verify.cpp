#include "flowdepth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "flowdepth/circle.hpp"
#include "flowdepth/contour.hpp"
#include "flowdepth/flow.hpp"
#include "flowdepth/l1_interp.hpp"
#include "flowdepth/lift2d.hpp"
#include "flowdepth/relu1d.hpp"
#include "flowdepth/so3.hpp"

namespace flowdepth {

namespace {

constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

MonotonePwl random_pwl(Rng& rng, int max_breaks = 6) {
    std::uniform_int_distribution<int> kd(1, max_breaks);
    std::uniform_real_distribution<double> xd(0.05, 0.95);
    std::uniform_real_distribution<double> sd(0.1, 1.0);
    int k = kd(rng);
    std::vector<double> xs{0.0};
    for (int i = 0; i < k; ++i) xs.push_back(xd(rng));
    xs.push_back(1.0);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double a, double b) { return b - a < 1e-3; }),
             xs.end());
    xs.back() = 1.0;
    std::vector<double> ys{0.0};
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        ys.push_back(ys.back() + sd(rng) * (xs[i + 1] - xs[i]));
    double total = ys.back();
    for (double& y : ys) y /= total;
    ys.front() = 0.0;
    ys.back() = 1.0;
    return MonotonePwl(xs, ys);
}

StepFunction random_step(Rng& rng, int max_breaks = 6) {
    std::uniform_int_distribution<int> kd(1, max_breaks);
    std::uniform_real_distribution<double> xd(0.05, 0.95);
    std::normal_distribution<double> vd(0.0, 1.0);
    int k = kd(rng);
    std::vector<double> xs{0.0};
    for (int i = 0; i < k; ++i) xs.push_back(xd(rng));
    xs.push_back(1.0);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double a, double b) { return b - a < 1e-3; }),
             xs.end());
    xs.back() = 1.0;
    StepFunction s;
    s.breaks = xs;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) s.values.push_back(vd(rng));
    return s;
}

InterpProblem random_problem(Rng& rng, int N) {
    std::normal_distribution<double> vd(0.0, 1.0);
    InterpProblem p{N, std::vector<double>(N + 1)};
    for (auto& v : p.u_vals) v = vd(rng);
    return p;
}

ControlSchedule random_schedule(Rng& rng, int max_segments = 3) {
    std::uniform_int_distribution<int> segd(1, max_segments);
    std::uniform_int_distribution<int> kinkd(1, 5);
    std::uniform_real_distribution<double> td(0.05, 0.3);
    std::uniform_real_distribution<double> cd(0.3, 1.0);
    ControlSchedule s;
    int count = segd(rng);
    for (int i = 0; i < count; ++i)
        s.segments.push_back({random_family_field(rng, kinkd(rng), cd(rng)), td(rng)});
    return s;
}

struct Runner {
    std::uint64_t seed;
    std::string filter;
    std::vector<PropertyResult>* out;

    template <typename Body>
    void prop(const std::string& name, Body body) {
        if (!filter.empty() && name.find(filter) == std::string::npos) return;
        PropertyResult r;
        r.name = name;
        Rng rng(seed);
        try {
            body(rng, r);
            r.pass = r.worst_slack >= 0.0;
        } catch (const std::exception& e) {
            r.pass = false;
            r.note = e.what();
        }
        out->push_back(r);
    }
};

// slack contribution: how far `value` sits inside `bound` (negative = violated)
void tighten(PropertyResult& r, double slack) {
    if (r.samples == 0 || slack < r.worst_slack) r.worst_slack = slack;
    ++r.samples;
}

double sup_diff(const MonotonePwl& a, const MonotonePwl& b, int pts = 1000) {
    double worst = 0.0;
    for (int i = 0; i <= pts; ++i) {
        double x = static_cast<double>(i) / pts;
        worst = std::max(worst, std::abs(a(x) - b(x)));
    }
    return worst;
}

double rk4_scalar(const ReluField1D& f, double t, double x0, double h) {
    double x = x0;
    double done = 0.0;
    while (done < t) {
        double step = std::min(h, t - done);
        double k1 = f.eval(x);
        double k2 = f.eval(x + 0.5 * step * k1);
        double k3 = f.eval(x + 0.5 * step * k2);
        double k4 = f.eval(x + step * k3);
        x += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        done += step;
    }
    return x;
}

void core1d_properties(Runner& run) {
    run.prop("core1d.tv_subadditivity", [](Rng& rng, PropertyResult& r) {
        std::normal_distribution<double> vd(0.0, 1.0);
        for (int s = 0; s < 100; ++s) {
            const int n = 32;
            std::vector<double> f(n + 1), g(n + 1), sum(n + 1);
            for (int i = 0; i <= n; ++i) {
                f[i] = vd(rng);
                g[i] = vd(rng);
                sum[i] = f[i] + g[i];
            }
            double lhs = tv_of_samples(GridFunction(n, sum));
            double rhs = tv_of_samples(GridFunction(n, f)) + tv_of_samples(GridFunction(n, g));
            tighten(r, rhs - lhs + 1e-12);
        }
    });

    run.prop("core1d.tv_refinement_monotone", [](Rng& rng, PropertyResult& r) {
        std::normal_distribution<double> cd(0.0, 1.0);
        for (int s = 0; s < 20; ++s) {
            double c1 = cd(rng), c2 = cd(rng), c3 = cd(rng);
            auto f = [=](double x) {
                return c1 * std::sin(2.0 * kPi * x) + c2 * std::cos(6.0 * kPi * x) + c3 * x;
            };
            double prev = 0.0;
            for (int n = 16; n <= 1024; n *= 2) {
                double cur = tv_of_samples(GridFunction::sample(f, n));
                tighten(r, cur - prev + 1e-12);
                prev = cur;
            }
        }
    });

    run.prop("core1d.step_triangle", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 200; ++s) {
            StepFunction a = random_step(rng), b = random_step(rng), c = random_step(rng);
            double lhs = tv_step_difference(a, c);
            double rhs = tv_step_difference(a, b) + tv_step_difference(b, c);
            tighten(r, rhs - lhs + 1e-12);
        }
    });

    run.prop("core1d.reparam_invariance", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 100; ++s) {
            StepFunction a = random_step(rng);
            MonotonePwl phi = random_pwl(rng);
            StepFunction pulled;  // a o phi: breakpoints phi^{-1}(b), same values
            pulled.values = a.values;
            pulled.breaks.clear();
            for (double bx : a.breaks) pulled.breaks.push_back(phi.inverse(bx));
            pulled.breaks.front() = 0.0;
            pulled.breaks.back() = 1.0;
            tighten(r, -std::abs(tv(pulled) - tv(a)));
        }
    });

    run.prop("core1d.compose_associative", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 50; ++s) {
            MonotonePwl a = random_pwl(rng), b = random_pwl(rng), c = random_pwl(rng);
            MonotonePwl left = compose(compose(a, b), c);
            MonotonePwl right = compose(a, compose(b, c));
            tighten(r, 1e-12 - sup_diff(left, right));
        }
    });

    run.prop("core1d.registry_diffeo", [](Rng&, PropertyResult& r) {
        for (const auto& name : registry_names()) {
            SmoothMap m = make_map(name);
            tighten(r, 1e-12 - std::abs(m.f(0.0)));
            tighten(r, 1e-12 - std::abs(m.f(1.0) - 1.0));
            double min_slope = 1e300;
            for (int i = 0; i <= 10000; ++i)
                min_slope = std::min(min_slope, m.d1(i / 10000.0));
            tighten(r, min_slope);
        }
    });
}

void relu1d_properties(Runner& run) {
    run.prop("relu1d.metric_axioms", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 500; ++s) {
            MonotonePwl a = random_pwl(rng), b = random_pwl(rng), c = random_pwl(rng);
            double dab = distance(a, b), dba = distance(b, a);
            tighten(r, -std::abs(dab - dba));  // symmetry is exact
            tighten(r, dab + distance(b, c) + 1e-12 - distance(a, c));
            tighten(r, -std::abs(distance(a, a)));  // d(a,a) == 0
        }
    });

    run.prop("relu1d.right_invariance", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 100; ++s) {
            MonotonePwl a = random_pwl(rng), b = random_pwl(rng), phi = random_pwl(rng);
            double base = distance(a, b);
            double moved = distance(compose(a, phi), compose(b, phi));
            tighten(r, 1e-12 - std::abs(base - moved));
        }
    });

    run.prop("relu1d.compositional_triangle", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 200; ++s) {
            MonotonePwl a = random_pwl(rng), b = random_pwl(rng);
            tighten(r, complexity(a) + complexity(b) + 1e-12 - complexity(compose(a, b)));
        }
    });

    run.prop("relu1d.sharpening", [](Rng& rng, PropertyResult& r) {
        for (const auto& name : registry_names()) {
            SmoothMap m = make_map(name);
            tighten(r, legacy_upper_bound(m) + 1e-9 - complexity(m));
        }
        for (int s = 0; s < 100; ++s) {
            MonotonePwl a = random_pwl(rng);
            tighten(r, legacy_upper_bound(a) + 1e-12 - complexity(a));
        }
    });

    run.prop("relu1d.geodesic_speed", [](Rng&, PropertyResult& r) {
        const int n = 4096;
        for (const char* name : {"exp_map", "fig1", "eps_quad:1"}) {
            MonotonePwl p1 = to_pwl(make_map("identity"), n);
            MonotonePwl p2 = to_pwl(make_map(name), n);
            double d = distance(p1, p2);
            for (double t : {0.25, 0.5, 0.75}) {
                MonotonePwl gt = geodesic_point(p1, p2, t, n);
                tighten(r, 1e-3 - std::abs(distance(p1, gt) - t * d));
            }
        }
    });

    run.prop("relu1d.sampled_refinement", [](Rng&, PropertyResult& r) {
        SmoothMap id = make_map("identity");
        for (const char* name : {"exp_map", "fig1"}) {
            SmoothMap m = make_map(name);
            double d = distance(id, m);
            double prev = 0.0;
            for (int nodes : {5, 9, 17, 33, 65}) {
                double sd = sampled_distance(SampledPair::uniform(id, m, nodes));
                tighten(r, sd - prev + 1e-12);   // nondecreasing under refinement
                tighten(r, d + 1e-6 - sd);       // never above the continuum distance
                prev = sd;
            }
        }
    });

    run.prop("relu1d.sampled_attained", [](Rng& rng, PropertyResult& r) {
        // the piecewise-linear interpolating pair achieves the finite-sample
        // distance exactly
        std::uniform_int_distribution<int> md(3, 12);
        for (int s = 0; s < 100; ++s) {
            int m = md(rng);
            MonotonePwl a = random_pwl(rng), b = random_pwl(rng);
            std::vector<double> z(m), xs(m), ys(m);
            for (int i = 0; i < m; ++i) {
                z[i] = static_cast<double>(i) / (m - 1);
                xs[i] = a(z[i]);
                ys[i] = b(z[i]);
            }
            xs.front() = ys.front() = 0.0;
            xs.back() = ys.back() = 1.0;
            double sd = sampled_distance(SampledPair(z, xs, ys));
            MonotonePwl pa(z, xs), pb(z, ys);
            tighten(r, 1e-12 - std::abs(distance(pa, pb) - sd));
        }
    });

    run.prop("relu1d.geodesic_parallel_serial", [](Rng&, PropertyResult& r) {
        SmoothMap id = make_map("identity");
        SmoothMap m = make_map("exp_map");
        double p = geodesic_length(id, m, 16, 512);
        double s = geodesic_length_serial(id, m, 16, 512);
        tighten(r, -std::abs(p - s));  // bitwise equal
    });
}

void l1_properties(Runner& run) {
    run.prop("l1.lp_equivalence", [](Rng& rng, PropertyResult& r) {
        std::uniform_int_distribution<int> nd(2, 12);
        for (int s = 0; s < 200; ++s) {
            InterpProblem p = random_problem(rng, nd(rng));
            double closed = min_weight(p);
            double lp = lp_oracle(p);
            tighten(r, 1e-8 - std::abs(closed - lp));
            InterpWitness wit = witness(p);
            tighten(r, 1e-10 - wit.feasibility_residual(p));
            tighten(r, 1e-10 - std::abs(wit.weight_sum() - closed));
        }
    });

    run.prop("l1.homogeneity", [](Rng& rng, PropertyResult& r) {
        std::uniform_real_distribution<double> cd(-3.0, 3.0);
        for (int s = 0; s < 100; ++s) {
            InterpProblem p = random_problem(rng, 8);
            double c = cd(rng);
            InterpProblem q = p;
            for (auto& v : q.u_vals) v *= c;
            tighten(r, 1e-10 - std::abs(min_weight(q) - std::abs(c) * min_weight(p)));
        }
    });

    run.prop("l1.subadditivity", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 100; ++s) {
            InterpProblem p = random_problem(rng, 8), q = random_problem(rng, 8);
            InterpProblem sum = p;
            for (int i = 0; i <= 8; ++i) sum.u_vals[i] += q.u_vals[i];
            tighten(r, min_weight(p) + min_weight(q) + 1e-10 - min_weight(sum));
        }
    });

    run.prop("l1.symmetric_form", [](Rng& rng, PropertyResult& r) {
        std::uniform_int_distribution<int> nd(2, 16);
        for (int s = 0; s < 200; ++s) {
            InterpProblem p = random_problem(rng, nd(rng));
            tighten(r, 1e-12 - std::abs(min_weight(p) - min_weight_symmetric(p)));
        }
    });

    run.prop("l1.boundary_secants", [](Rng&, PropertyResult& r) {
        auto cases = std::vector<std::pair<Fn, Fn>>{
            {[](double x) { return x * (1.0 - x); }, [](double x) { return 1.0 - 2.0 * x; }},
            {[](double x) { return std::sin(kPi * x) / kPi; },
             [](double x) { return std::cos(kPi * x); }},
            {[](double x) { return std::sin(2.0 * kPi * x) / (2.0 * kPi); },
             [](double x) { return std::cos(2.0 * kPi * x); }}};
        for (const auto& [u, du] : cases) {
            for (int N : {4, 8, 16, 64, 256}) {
                std::vector<double> vals(N + 1);
                for (int i = 0; i <= N; ++i) vals[i] = u(static_cast<double>(i) / N);
                double d1 = N * (vals[1] - vals[0]);
                double dN = N * (vals[N] - vals[N - 1]);
                double sum_abs = 0.0;
                for (int i = 1; i < N; ++i)
                    sum_abs += std::abs(N * (vals[i + 1] - 2.0 * vals[i] + vals[i - 1]));
                tighten(r, sum_abs + 1e-9 - std::abs(d1 + dN));
            }
        }
    });
}

void flow_properties(Runner& run) {
    run.prop("flow.fixed_endpoints", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 40; ++s) {
            ControlSchedule sched = random_schedule(rng);
            MonotonePwl map = flow_map(sched, 64);
            tighten(r, -std::abs(map(0.0)));
            tighten(r, -std::abs(map(1.0) - 1.0));
        }
    });

    run.prop("flow.depth_bound", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 40; ++s) {
            ControlSchedule sched = random_schedule(rng);
            MonotonePwl map = flow_map(sched, 1024);
            tighten(r, sched.total_time() + 1e-8 - complexity(map));
        }
    });

    run.prop("flow.field_derivative_tv", [](Rng& rng, PropertyResult& r) {
        std::uniform_int_distribution<int> kd(1, 6);
        for (int s = 0; s < 100; ++s) {
            ReluField1D f = random_family_field(rng, kd(rng), 1.0);
            tighten(r, f.weight_cost() + 1e-12 - f.derivative_tv());
        }
    });

    run.prop("flow.rk4_crosscheck", [](Rng& rng, PropertyResult& r) {
        std::uniform_real_distribution<double> td(0.1, 0.4);
        std::uniform_real_distribution<double> xd(0.0, 1.0);
        std::uniform_int_distribution<int> kd(1, 4);
        for (int s = 0; s < 50; ++s) {
            ReluField1D f = random_family_field(rng, kd(rng), 0.5);
            double t = td(rng), x0 = xd(rng);
            double exact = flow_exact(f, t, x0);
            double rk = rk4_scalar(f, t, x0, 1e-4);
            tighten(r, 1e-9 - std::abs(exact - rk));
        }
    });

    run.prop("flow.inverse", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 30; ++s) {
            ReluField1D f = random_family_field(rng, 3, 1.0);
            ControlSchedule sched;
            sched.segments.push_back({f, 0.4});
            sched.segments.push_back({f.negated(), 0.4});
            MonotonePwl map = flow_map(sched, 256);
            tighten(r, 1e-10 - sup_diff(map, MonotonePwl::identity()));
        }
    });

    run.prop("flow.semigroup", [](Rng& rng, PropertyResult& r) {
        std::uniform_real_distribution<double> td(0.05, 0.4);
        for (int s = 0; s < 30; ++s) {
            ReluField1D f = random_family_field(rng, 3, 1.0);
            double t1 = td(rng), t2 = td(rng);
            for (int i = 0; i <= 50; ++i) {
                double x = i / 50.0;
                double combined = flow_exact(f, t1 + t2, x);
                double split = flow_exact(f, t2, flow_exact(f, t1, x));
                tighten(r, 1e-12 - std::abs(combined - split));
            }
        }
    });

    run.prop("flow.euler_order", [](Rng& rng, PropertyResult& r) {
        ControlSchedule sched;
        sched.segments.push_back({random_family_field(rng, 3, 1.0), 0.5});
        MonotonePwl exact = flow_map(sched, 256);
        double prev_err = -1.0;
        for (int steps : {64, 128, 256, 512}) {
            double err = sup_diff(resnet_iterate(sched, steps, 256), exact);
            if (prev_err > 0.0) {
                double ratio = prev_err / err;
                tighten(r, ratio - 1.5);
                tighten(r, 2.5 - ratio);
            }
            prev_err = err;
        }
    });

    run.prop("flow.parallel_serial", [](Rng& rng, PropertyResult& r) {
        ControlSchedule sched = random_schedule(rng);
        MonotonePwl p = flow_map(sched, 512);
        MonotonePwl s = flow_map_serial(sched, 512);
        for (std::size_t i = 0; i < p.ys().size(); ++i)
            tighten(r, -std::abs(p.ys()[i] - s.ys()[i]));
    });
}

void lift_properties(Runner& run) {
    run.prop("lift.identity_at_zero", [](Rng& rng, PropertyResult& r) {
        LiftConfig cfg = make_lift_config("quad", -1.0, 1.0, 0.5, 0.3);
        std::uniform_real_distribution<double> pd(-1.9, 1.9);
        for (int s = 0; s < 200; ++s) {
            Vec2 p{pd(rng), pd(rng)};
            Vec2 q = lift_flow(cfg, 0.0, p);
            tighten(r, -std::abs(q[0] - p[0]));
            tighten(r, -std::abs(q[1] - p[1]));
        }
    });

    run.prop("lift.outside_support", [](Rng& rng, PropertyResult& r) {
        LiftConfig cfg = make_lift_config("sin3", -1.0, 1.0, 0.5, 0.2);
        std::uniform_real_distribution<double> rd(1.5 + 1e-9, 2.0);
        std::uniform_real_distribution<double> ad(0.0, 2.0 * kPi);
        for (int s = 0; s < 1000; ++s) {
            double rad = rd(rng), ang = ad(rng);
            Vec2 p{rad * std::cos(ang), rad * std::sin(ang)};
            Vec2 x = cutoff_field(cfg, p);
            tighten(r, -std::abs(x[0]) - std::abs(x[1]));
            Vec2 q = lift_flow(cfg, 1.0, p);
            tighten(r, -std::abs(q[0] - p[0]) - std::abs(q[1] - p[1]));
        }
    });

    run.prop("lift.injectivity", [](Rng&, PropertyResult& r) {
        LiftConfig cfg = make_lift_config("quad", -1.0, 1.0, 0.5, 0.3);
        std::vector<Vec2> out;
        for (int i = 0; i < 50; ++i) {
            for (int j = 0; j < 50; ++j) {
                Vec2 p{-2.0 + 4.0 * i / 49.0, -2.0 + 4.0 * j / 49.0};
                if (std::hypot(p[0], p[1]) > 2.0) continue;
                out.push_back(lift_flow(cfg, 1.0, p));
            }
        }
        double min_gap = 1e300;
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = a + 1; b < out.size(); ++b)
                min_gap = std::min(min_gap,
                                   std::hypot(out[a][0] - out[b][0], out[a][1] - out[b][1]));
        tighten(r, min_gap - 1e-9);
    });

    run.prop("lift.ball_preservation", [](Rng& rng, PropertyResult& r) {
        LiftConfig cfg = make_lift_config("sin3", -1.0, 1.0, 0.5, 0.2);
        std::uniform_real_distribution<double> rd(0.0, 2.0);
        std::uniform_real_distribution<double> ad(0.0, 2.0 * kPi);
        for (int s = 0; s < 300; ++s) {
            double rad = rd(rng), ang = ad(rng);
            Vec2 p{rad * std::cos(ang), rad * std::sin(ang)};
            for (double t : {0.25, 0.5, 1.0}) {
                Vec2 q = lift_flow(cfg, t, p);
                tighten(r, 2.0 + 1e-9 - std::hypot(q[0], q[1]));
            }
        }
    });

    run.prop("lift.reversibility", [](Rng& rng, PropertyResult& r) {
        LiftConfig cfg = make_lift_config("quad", -1.0, 1.0, 0.5, 0.3);
        std::uniform_real_distribution<double> pd(-1.4, 1.4);
        for (int s = 0; s < 100; ++s) {
            Vec2 p{pd(rng), pd(rng)};
            Vec2 fwd = lift_flow(cfg, 1.0, p);
            Vec2 back = lift_flow_reversed(cfg, 1.0, fwd);
            tighten(r, 1e-7 - std::hypot(back[0] - p[0], back[1] - p[1]));
        }
    });

    run.prop("lift.parallel_serial", [](Rng&, PropertyResult& r) {
        LiftConfig cfg = make_lift_config("quad", -1.0, 1.0, 0.5, 0.3);
        LiftReport p = verify_factorization(cfg, 200);
        LiftReport s = verify_factorization_serial(cfg, 200);
        tighten(r, -std::abs(p.sup_error - s.sup_error));
    });
}

void so3_properties(Runner& run) {
    run.prop("so3.sandwich", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 1000; ++s) {
            Rotation3 R1 = random_rotation(rng), R2 = random_rotation(rng);
            L1Bounds b = d_l1_bounds(R1, R2);
            tighten(r, b.log_upper - b.lower + 1e-10);
            tighten(r, std::sqrt(3.0) * b.lower - b.log_upper + 1e-10);
            tighten(r, std::min(b.log_upper, b.euler_upper) - b.lower + 1e-10);
        }
    });

    run.prop("so3.euler_recompose", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 1000; ++s) {
            Rotation3 R1 = random_rotation(rng), R2 = random_rotation(rng);
            L1Bounds b = d_l1_bounds(R1, R2);
            Rotation3 rebuilt = b.best_word.compose();
            tighten(r, 1e-9 - (rebuilt - R2 * R1.transpose()).norm());
        }
    });

    run.prop("so3.l2_triangle", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 1000; ++s) {
            Rotation3 a = random_rotation(rng), b = random_rotation(rng),
                      c = random_rotation(rng);
            tighten(r, d_l2(a, b) + d_l2(b, c) - d_l2(a, c) + 1e-10);
        }
    });

    run.prop("so3.log_roundtrip", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 500; ++s) {
            Rotation3 R = random_rotation(rng);
            AxisAngle aa = principal_log(R);
            tighten(r, 1e-9 - (exp_rot(aa.axis, aa.theta) - R).norm());
        }
    });

    run.prop("so3.small_angle", [](Rng& rng, PropertyResult& r) {
        std::uniform_real_distribution<double> td(1e-6, 1e-3);
        std::normal_distribution<double> gd(0.0, 1.0);
        for (int s = 0; s < 200; ++s) {
            Eigen::Vector3d axis(gd(rng), gd(rng), gd(rng));
            axis.normalize();
            double theta = td(rng);
            Rotation3 R = exp_rot(axis, theta);
            L1Bounds b = d_l1_bounds(Rotation3::Identity(), R);
            Eigen::Vector3d naive(0.5 * (R(2, 1) - R(1, 2)), 0.5 * (R(0, 2) - R(2, 0)),
                                  0.5 * (R(1, 0) - R(0, 1)));
            tighten(r, 1e-6 - std::abs(b.log_upper - naive.lpNorm<1>()) / theta);
            double ratio = b.euler_upper / b.log_upper;
            tighten(r, ratio - (1.0 - 1e-3));
            tighten(r, (1.0 + 1e-3) - ratio);
        }
    });
}

void circle_properties(Runner& run) {
    const double golden = kPi * (std::sqrt(5.0) - 1.0) / 2.0;
    const std::vector<double> betas{kPi / 3.0, golden, kPi * (std::sqrt(2.0) - 1.0)};

    run.prop("circle.gb_closed_vs_quadrature", [&](Rng&, PropertyResult& r) {
        const int grid = 1 << 16;
        for (double beta : betas) {
            double cb = std::cos(beta);
            for (int n = 1; n <= 64; ++n) {
                double acc = 0.0;
                for (int i = 0; i < grid; ++i) {
                    double x = 2.0 * kPi * i / grid;
                    double v = std::cos(x) - cb;
                    if (v > 0.0) acc += v * std::cos(n * x);
                }
                double quad = acc / grid;
                tighten(r, 1e-8 - std::abs(quad - gb_coeff(n, beta)));
            }
        }
    });

    run.prop("circle.gb_decay", [&](Rng&, PropertyResult& r) {
        for (double beta : betas)
            for (int n = 2; n <= 512; ++n)
                tighten(r, 1.0 - std::abs(gb_coeff(n, beta)) * n * n);
    });

    run.prop("circle.deconv_roundtrip", [&](Rng& rng, PropertyResult& r) {
        // convolve a band-limited density with the kernel, deconvolve the
        // result, and reconstruct: this is the well-conditioned round trip
        const int n = 1 << 14;
        const int M = 12;
        std::normal_distribution<double> cd(0.0, 1.0);
        for (double beta : betas) {
            std::vector<double> ac(M + 1), as(M + 1);
            for (int k = 0; k <= M; ++k) {
                ac[k] = cd(rng) / (1.0 + k * k);
                as[k] = k == 0 ? 0.0 : cd(rng) / (1.0 + k * k);
            }
            auto rho0 = [&](double x) {
                double acc = ac[0];
                for (int k = 1; k <= M; ++k)
                    acc += ac[k] * std::cos(k * x) + as[k] * std::sin(k * x);
                return acc;
            };
            auto gb = [&](double x) {
                double v = std::cos(x) - std::cos(beta);
                return v > 0.0 ? v : 0.0;
            };
            PeriodicGrid kernel = PeriodicGrid::sample(gb, n);
            PeriodicGrid fg = convolve(kernel, PeriodicGrid::sample(rho0, n));
            DeconvResult dec = deconvolve(fg, beta, M);
            PeriodicGrid rec = convolve(kernel, dec.rho);
            double worst = 0.0;
            for (int i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(rec.values[i] - fg.values[i]));
            tighten(r, 1e-8 - worst);
        }
    });

    run.prop("circle.abc_at_one", [](Rng&, PropertyResult& r) {
        tighten(r, -std::abs(rho_A(1.0) - 1.0));
        tighten(r, -std::abs(rho_B(1.0) + 3.0));
        tighten(r, -std::abs(rho_C(1.0) - 3.0));
    });

    run.prop("circle.J_zero", [](Rng&, PropertyResult& r) {
        for (const char* spec : {"identity", "warp:0.1,1", "warp:0.05,2"}) {
            CircleMap m = make_circle_map(spec);
            GlobalBound g = global_bound_functional(m, m, 512);
            tighten(r, -std::abs(g.J));
            tighten(r, -std::abs(g.sup_term));
        }
    });

    run.prop("circle.J_rotation_invariance", [](Rng& rng, PropertyResult& r) {
        std::uniform_real_distribution<double> cd(0.0, 2.0 * kPi);
        CircleMap m1 = make_circle_map("warp:0.08,1");
        CircleMap m2 = make_circle_map("warp:0.05,2");
        GlobalBound base = global_bound_functional(m1, m2, 2048);
        for (int s = 0; s < 5; ++s) {
            double c = cd(rng);
            auto shift = [c](const CircleMap& m) {
                CircleMap out = m;
                out.f = [m, c](double t) { return m.f(t + c) - c; };
                out.d1 = [m, c](double t) { return m.d1(t + c); };
                out.d2 = [m, c](double t) { return m.d2(t + c); };
                out.d3 = [m, c](double t) { return m.d3(t + c); };
                return out;
            };
            GlobalBound moved = global_bound_functional(shift(m1), shift(m2), 2048);
            tighten(r, 2e-4 - std::abs(moved.J - base.J));
        }
    });

    run.prop("circle.J_self_convergence", [](Rng&, PropertyResult& r) {
        CircleMap m1 = make_circle_map("warp:0.05,1");
        CircleMap m2 = make_circle_map("identity");
        double coarse = global_bound_functional(m1, m2, 2048).J;
        double fine = global_bound_functional(m1, m2, 4096).J;
        tighten(r, 1e-4 - std::abs(coarse - fine));
    });

    run.prop("circle.local_bound_convergence", [](Rng&, PropertyResult& r) {
        CircleMap psi = make_circle_map("warp:0.1,1");
        PeriodicGrid u1 = PeriodicGrid::sample([](double t) { return std::cos(t); }, 1 << 10);
        PeriodicGrid u2 = PeriodicGrid::sample([](double t) { return std::cos(t); }, 1 << 11);
        double b1 = local_bound(u1, psi, kPi / 3.0, 1.0, 1.0, 64);
        double b2 = local_bound(u2, psi, kPi / 3.0, 1.0, 1.0, 64);
        tighten(r, 1e-3 - std::abs(b1 - b2));
    });
}

void tool_properties(Runner& run) {
    run.prop("contour.parallel_serial", [](Rng&, PropertyResult& r) {
        auto p = contour_field(6, ContourMetric::Flow, 1024);
        auto s = contour_field_serial(6, ContourMetric::Flow, 1024);
        for (std::size_t i = 0; i < p.size(); ++i)
            tighten(r, -std::abs(p[i].value - s[i].value));
    });

    run.prop("io.csv_roundtrip", [](Rng& rng, PropertyResult& r) {
        for (int s = 0; s < 20; ++s) {
            MonotonePwl a = random_pwl(rng);
            std::stringstream buf;
            write_csv(buf, a);
            MonotonePwl b = read_pwl_csv(buf);
            tighten(r, a.xs().size() == b.xs().size() ? 0.0 : -1.0);
            for (std::size_t i = 0; i < a.xs().size(); ++i) {
                tighten(r, -std::abs(a.xs()[i] - b.xs()[i]));
                tighten(r, -std::abs(a.ys()[i] - b.ys()[i]));
            }
        }
    });
}

}  // namespace

std::vector<PropertyResult> run_verify(std::uint64_t seed, const std::string& filter) {
    std::vector<PropertyResult> results;
    Runner run{seed, filter, &results};
    core1d_properties(run);
    relu1d_properties(run);
    l1_properties(run);
    flow_properties(run);
    lift_properties(run);
    so3_properties(run);
    circle_properties(run);
    tool_properties(run);
    return results;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace flowdepth
