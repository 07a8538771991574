#include "flowdepth/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flowdepth/relu1d.hpp"

namespace flowdepth {

namespace {

double relu(double x) { return x > 0.0 ? x : 0.0; }

// expm1(s*t)/s with a series fallback near s*t = 0.
double expm1_over(double s, double t) {
    double st = s * t;
    if (std::abs(st) < 1e-8) return t * (1.0 + 0.5 * st + st * st / 6.0);
    return std::expm1(st) / s;
}

}  // namespace

ReluField1D::ReluField1D(std::vector<ReluTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (t.a != 0.0) kinks_.push_back(-t.b / t.a);
    }
    std::sort(kinks_.begin(), kinks_.end());
    kinks_.erase(std::unique(kinks_.begin(), kinks_.end()), kinks_.end());

    const std::size_t cells = kinks_.size() + 1;
    slopes_.assign(cells, 0.0);
    for (std::size_t c = 0; c < cells; ++c) {
        double probe;
        if (kinks_.empty())
            probe = 0.0;
        else if (c == 0)
            probe = kinks_.front() - 1.0;
        else if (c == cells - 1)
            probe = kinks_.back() + 1.0;
        else
            probe = 0.5 * (kinks_[c - 1] + kinks_[c]);
        double s = 0.0;
        for (const auto& t : terms_)
            if (t.a != 0.0 && t.a * probe + t.b > 0.0) s += t.w * t.a;
        slopes_[c] = s;
    }

    kink_values_.resize(kinks_.size());
    for (std::size_t i = 0; i < kinks_.size(); ++i) {
        double acc = 0.0;
        for (const auto& t : terms_) acc += t.w * relu(t.a * kinks_[i] + t.b);
        kink_values_[i] = acc;
    }
}

double ReluField1D::eval(double x) const {
    if (kinks_.empty()) {
        double acc = 0.0;
        for (const auto& t : terms_) acc += t.w * relu(t.a * x + t.b);
        return acc;
    }
    auto it = std::lower_bound(kinks_.begin(), kinks_.end(), x);
    if (it != kinks_.end() && *it == x)
        return kink_values_[static_cast<std::size_t>(it - kinks_.begin())];
    std::size_t cell = static_cast<std::size_t>(it - kinks_.begin());
    std::size_t anchor = (cell == 0) ? 0 : cell - 1;
    return kink_values_[anchor] + slopes_[cell] * (x - kinks_[anchor]);
}

double ReluField1D::weight_cost() const {
    double s = 0.0;
    for (const auto& t : terms_) s += std::abs(t.w * t.a);
    return s;
}

bool ReluField1D::in_family(double tol) const {
    return std::abs(eval(0.0)) <= tol && std::abs(eval(1.0)) <= tol &&
           weight_cost() <= 1.0 + tol;
}

double ReluField1D::derivative_tv() const {
    double total = 0.0;
    for (std::size_t i = 0; i < kinks_.size(); ++i) {
        if (kinks_[i] > 0.0 && kinks_[i] < 1.0)
            total += std::abs(slopes_[i + 1] - slopes_[i]);
    }
    return total;
}

ReluField1D ReluField1D::negated() const { return scaled(-1.0); }

ReluField1D ReluField1D::scaled(double factor) const {
    std::vector<ReluTerm> t = terms_;
    for (auto& term : t) term.w *= factor;
    return ReluField1D(std::move(t));
}

ReluField1D ReluField1D::with_pinned_endpoints() const {
    double r0 = eval(0.0), r1 = eval(1.0);
    std::vector<ReluTerm> t = terms_;
    t.push_back({-r0, -1.0, 1.0});
    t.push_back({-r1, 1.0, 0.0});
    return ReluField1D(std::move(t));
}

std::size_t ReluField1D::cell_of(double x, double direction) const {
    auto it = std::lower_bound(kinks_.begin(), kinks_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - kinks_.begin());
    if (it != kinks_.end() && *it == x) return direction > 0.0 ? i + 1 : i;
    return i;
}

void ReluField1D::cell_coeffs(std::size_t cell, double& slope, double& intercept) const {
    slope = slopes_[cell];
    if (kinks_.empty()) {
        double acc = 0.0;
        for (const auto& t : terms_) acc += t.w * relu(t.b);
        intercept = acc;
        return;
    }
    std::size_t anchor = (cell == 0) ? 0 : cell - 1;
    intercept = kink_values_[anchor] - slope * kinks_[anchor];
}

ReluField1D field_from_witness(const InterpWitness& wit) {
    std::vector<ReluTerm> terms;
    const int N = wit.N;
    for (int i = 0; i <= N; ++i) {
        double node = static_cast<double>(i) / N;
        if (wit.w[i] != 0.0) terms.push_back({wit.w[i], 1.0, -node});
        if (wit.v[i] != 0.0) terms.push_back({wit.v[i], -1.0, node});
    }
    if (wit.C != 0.0) terms.push_back({wit.C, 0.0, 1.0});
    return ReluField1D(std::move(terms)).with_pinned_endpoints();
}

double flow_exact(const ReluField1D& field, double t, double x0) {
    if (t < 0.0) throw DomainError("flow durations must be nonnegative");
    double x = x0;
    double rem = t;
    const auto& kinks = field.kinks();
    const std::size_t nk = kinks.size();
    while (rem > 0.0) {
        double fx = field.eval(x);
        if (fx == 0.0) return x;
        double dir = fx > 0.0 ? 1.0 : -1.0;
        std::size_t cell = field.cell_of(x, dir);
        double slope, intercept;
        field.cell_coeffs(cell, slope, intercept);

        bool has_boundary = dir > 0.0 ? (cell < nk) : (cell > 0);
        if (!has_boundary) {
            return x + fx * expm1_over(slope, rem);
        }
        std::size_t bidx = dir > 0.0 ? cell : cell - 1;
        double xb = kinks[bidx];
        double fb = slope * xb + intercept;

        double t_hit;
        if (slope == 0.0) {
            t_hit = (xb - x) / fx;
        } else if (fb == 0.0 || (fb > 0.0) != (fx > 0.0)) {
            // equilibrium inside the cell or at its boundary: never leaves
            return x + fx * expm1_over(slope, rem);
        } else {
            t_hit = std::log(fb / fx) / slope;
        }
        if (t_hit < 0.0) t_hit = 0.0;
        if (t_hit >= rem) return x + fx * expm1_over(slope, rem);
        rem -= t_hit;
        x = xb;
    }
    return x;
}

double ControlSchedule::total_time() const {
    double s = 0.0;
    for (const auto& seg : segments) s += seg.duration;
    return s;
}

namespace {

double flow_through(const ControlSchedule& schedule, double x0) {
    double x = x0;
    for (const auto& seg : schedule.segments) x = flow_exact(seg.field, seg.duration, x);
    return x;
}

MonotonePwl pwl_from_flow_values(std::vector<double> ys, int n) {
    if (std::abs(ys.front()) > 1e-9 || std::abs(ys.back() - 1.0) > 1e-9)
        throw BoundaryViolation("flow map must fix 0 and 1 (schedule not in the family?)");
    ys.front() = 0.0;
    ys.back() = 1.0;
    for (int i = 0; i < n; ++i)
        if (!(ys[i + 1] > ys[i])) throw MonotonicityViolation();
    std::vector<double> xs(n + 1);
    for (int i = 0; i <= n; ++i) xs[i] = static_cast<double>(i) / n;
    xs[0] = 0.0;
    xs[n] = 1.0;
    return MonotonePwl(std::move(xs), std::move(ys));
}

}  // namespace

MonotonePwl flow_map(const ControlSchedule& schedule, int n) {
    std::vector<double> ys(n + 1);
#pragma omp parallel for schedule(static)
    for (int i = 0; i <= n; ++i)
        ys[i] = flow_through(schedule, static_cast<double>(i) / n);
    return pwl_from_flow_values(std::move(ys), n);
}

MonotonePwl flow_map_serial(const ControlSchedule& schedule, int n) {
    std::vector<double> ys(n + 1);
    for (int i = 0; i <= n; ++i)
        ys[i] = flow_through(schedule, static_cast<double>(i) / n);
    return pwl_from_flow_values(std::move(ys), n);
}

MonotonePwl resnet_iterate(const ControlSchedule& schedule, int steps_per_segment, int n) {
    if (steps_per_segment < 1) throw DomainError("resnet iteration needs steps >= 1");
    std::vector<double> ys(n + 1);
#pragma omp parallel for schedule(static)
    for (int i = 0; i <= n; ++i) {
        double x = static_cast<double>(i) / n;
        for (const auto& seg : schedule.segments) {
            double dt = seg.duration / steps_per_segment;
            for (int s = 0; s < steps_per_segment; ++s) x += dt * seg.field.eval(x);
        }
        ys[i] = x;
    }
    return pwl_from_flow_values(std::move(ys), n);
}

RealizeReport realize_geodesic(const SmoothMap& target, double delta, int k, int N, int grid) {
    if (k < 1 || N < 2) throw DomainError("realization needs k >= 1 and N >= 2");
    const SmoothMap id = make_map("identity");
    const double comp = complexity(target);
    const double budget = (1.0 + delta) * comp;

    std::vector<MonotonePwl> path;
    path.reserve(k + 1);
    for (int j = 0; j <= k; ++j)
        path.push_back(geodesic_point(id, target, static_cast<double>(j) / k, grid));

    RealizeReport report;
    report.k = k;
    report.N = N;
    report.budget = budget;

    std::vector<double> phi(grid + 1);
    for (int i = 0; i <= grid; ++i) phi[i] = static_cast<double>(i) / grid;

    for (int j = 0; j < k; ++j) {
        InterpProblem prob{N, std::vector<double>(N + 1)};
        for (int s = 0; s <= N; ++s) {
            double y = static_cast<double>(s) / N;
            double z = path[j].inverse(y);
            prob.u_vals[s] = path[j + 1](z) - y;
        }
        prob.u_vals.front() = 0.0;
        prob.u_vals.back() = 0.0;

        ReluField1D field = field_from_witness(witness(prob));
        double w = field.weight_cost();
        if (w < 1e-15) continue;
        ReluField1D member = field.scaled(1.0 / w);

        report.total_time += w;
        if (report.total_time > budget + 1e-12)
            throw BudgetExceeded("realized time " + std::to_string(report.total_time) +
                                 " exceeds budget " + std::to_string(budget));
        report.schedule.segments.push_back({member, w});

#pragma omp parallel for schedule(static)
        for (int i = 0; i <= grid; ++i) phi[i] = flow_exact(member, w, phi[i]);
    }

    double sup = 0.0;
    for (int i = 0; i <= grid; ++i)
        sup = std::max(sup, std::abs(phi[i] - target.f(static_cast<double>(i) / grid)));
    report.sup_error = sup;

    phi.front() = 0.0;
    phi.back() = 1.0;
    std::vector<double> xs(grid + 1);
    for (int i = 0; i <= grid; ++i) xs[i] = static_cast<double>(i) / grid;
    xs[0] = 0.0;
    xs[grid] = 1.0;
    report.achieved = MonotonePwl(std::move(xs), std::move(phi));
    return report;
}

}  // namespace flowdepth
