#include "flowdepth/lift2d.hpp"

#include <algorithm>
#include <cmath>

namespace flowdepth {

namespace {

double norm2(const Vec2& p) { return std::hypot(p[0], p[1]); }

Vec2 rk4_step(const LiftConfig& cfg, const Vec2& p, double h, double sign) {
    auto field = [&](const Vec2& q) {
        Vec2 v = cutoff_field(cfg, q);
        return Vec2{sign * v[0], sign * v[1]};
    };
    Vec2 k1 = field(p);
    Vec2 k2 = field({p[0] + 0.5 * h * k1[0], p[1] + 0.5 * h * k1[1]});
    Vec2 k3 = field({p[0] + 0.5 * h * k2[0], p[1] + 0.5 * h * k2[1]});
    Vec2 k4 = field({p[0] + h * k3[0], p[1] + h * k3[1]});
    return {p[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            p[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

Vec2 flow_signed(const LiftConfig& cfg, double t, const Vec2& p, double sign, double tol) {
    if (t < 0.0) throw DomainError("lift flow time must be nonnegative");
    if (norm2(p) >= 1.5) return p;
    Vec2 x = p;
    double done = 0.0;
    double h = t > 0.25 ? 0.25 : t;
    while (done < t) {
        if (h > t - done) h = t - done;
        Vec2 full = rk4_step(cfg, x, h, sign);
        Vec2 half = rk4_step(cfg, rk4_step(cfg, x, 0.5 * h, sign), 0.5 * h, sign);
        double err = std::hypot(full[0] - half[0], full[1] - half[1]) / 15.0;
        double allowed = tol * std::max(h / std::max(t, 1e-300), 1e-3);
        if (err <= allowed || h <= 1e-12) {
            // local extrapolation from the two half steps
            x = {half[0] + (half[0] - full[0]) / 15.0, half[1] + (half[1] - full[1]) / 15.0};
            done += h;
            if (err < 0.25 * allowed) h *= 2.0;
        } else {
            h *= 0.5;
        }
    }
    return x;
}

}  // namespace

LiftConfig make_lift_config(const std::string& fn, double k0, double k1,
                            double lambda, double kappa) {
    LiftConfig cfg;
    cfg.fn_name = fn;
    cfg.k0 = k0;
    cfg.k1 = k1;
    cfg.lambda = lambda;
    cfg.kappa = kappa;
    if (fn == "zero")
        cfg.f = [](double) { return 0.0; };
    else if (fn == "quad")
        cfg.f = [](double x) { return x * x; };
    else if (fn == "sin3")
        cfg.f = [](double x) { return std::sin(3.0 * x); };
    else
        throw DomainError("unknown lift target: " + fn);
    if (!(k1 > k0)) throw DomainError("lift interval must be nondegenerate");
    if (lambda <= 0.0 || kappa <= 0.0) throw DomainError("lift scalings must be positive");
    return cfg;
}

double cutoff_eta(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 1.5) return 0.0;
    double s = (r - 1.0) / 0.5;
    double step = s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
    return 1.0 - step;
}

Vec2 cutoff_field(const LiftConfig& cfg, const Vec2& p) {
    double e = cutoff_eta(norm2(p));
    if (e == 0.0) return {0.0, 0.0};
    return {0.0, e * cfg.kappa * cfg.f(p[0] / cfg.lambda)};
}

double segment_margin(const LiftConfig& cfg, int grid) {
    double worst = 0.0;
    for (int i = 0; i <= grid; ++i) {
        double u = cfg.k0 + (cfg.k1 - cfg.k0) * i / grid;
        double x = cfg.lambda * u;
        double y = cfg.kappa * cfg.f(u);
        worst = std::max(worst, std::hypot(x, y));
    }
    return 1.0 - worst;
}

Vec2 lift_flow(const LiftConfig& cfg, double t, const Vec2& p, double tol) {
    return flow_signed(cfg, t, p, 1.0, tol);
}

Vec2 lift_flow_reversed(const LiftConfig& cfg, double t, const Vec2& p, double tol) {
    return flow_signed(cfg, t, p, -1.0, tol);
}

namespace {

LiftReport report_for(const LiftConfig& cfg, int m, bool parallel) {
    LiftReport rep;
    rep.segment_margin = segment_margin(cfg);
    if (rep.segment_margin <= 0.0)
        throw ConfigViolation("lifted segments leave the unit ball; shrink lambda or kappa");
    std::vector<double> errs(m + 1);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i <= m; ++i) {
            double u = cfg.k0 + (cfg.k1 - cfg.k0) * i / m;
            Vec2 out = lift_flow(cfg, 1.0, {cfg.lambda * u, 0.0});
            errs[i] = std::abs(out[1] / cfg.kappa - cfg.f(u));
        }
    } else {
        for (int i = 0; i <= m; ++i) {
            double u = cfg.k0 + (cfg.k1 - cfg.k0) * i / m;
            Vec2 out = lift_flow(cfg, 1.0, {cfg.lambda * u, 0.0});
            errs[i] = std::abs(out[1] / cfg.kappa - cfg.f(u));
        }
    }
    rep.sup_error = *std::max_element(errs.begin(), errs.end());
    return rep;
}

}  // namespace

LiftReport verify_factorization(const LiftConfig& cfg, int m) {
    return report_for(cfg, m, true);
}

LiftReport verify_factorization_serial(const LiftConfig& cfg, int m) {
    return report_for(cfg, m, false);
}

}  // namespace flowdepth
