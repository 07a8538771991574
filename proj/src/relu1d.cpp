#include "flowdepth/relu1d.hpp"

#include <algorithm>
#include <cmath>

#include "flowdepth/l1_interp.hpp"

namespace flowdepth {

namespace {

void require_zero_boundary(const GridFunction& u) {
    if (std::abs(u.values.front()) > 1e-12 || std::abs(u.values.back()) > 1e-12)
        throw BoundaryViolation("perturbation must vanish at 0 and 1");
}

StepFunction slope_quotient(const StepFunction& du, const StepFunction& dpsi) {
    StepFunction q = step_difference(du, dpsi);  // reuse the merged grid
    for (std::size_t i = 0; i + 1 < q.breaks.size(); ++i) {
        double mid = 0.5 * (q.breaks[i] + q.breaks[i + 1]);
        double s = dpsi(mid);
        if (s <= kSlopeFloor) throw NonPositiveSlope();
        q.values[i] = du(mid) / s;
    }
    return q;
}

}  // namespace

double local_norm(const GridFunction& u, const MonotonePwl& psi) {
    require_zero_boundary(u);
    StepFunction dpsi;
    dpsi.breaks = psi.xs();
    dpsi.values = psi.slopes();
    return tv(slope_quotient(u.derivative(), dpsi));
}

double local_norm(const Perturbation& u, const SmoothMap& psi, double rtol) {
    if (std::abs(u.f(0.0)) > 1e-12 || std::abs(u.f(1.0)) > 1e-12)
        throw BoundaryViolation("perturbation must vanish at 0 and 1");
    auto quotient = [&](double x) {
        double s = psi.d1(x);
        if (s <= kSlopeFloor) throw NonPositiveSlope();
        return u.d1(x) / s;
    };
    return tv_refined(quotient, rtol);
}

double complexity(const MonotonePwl& psi) {
    return tv(psi.log_slope());
}

double complexity(const SmoothMap& psi, double rtol) {
    auto g = [&](double x) {
        double s = psi.d1(x);
        if (s <= kSlopeFloor) throw NonPositiveSlope();
        return std::log(s);
    };
    return tv_refined(g, rtol);
}

double distance(const MonotonePwl& psi1, const MonotonePwl& psi2) {
    return tv_step_difference(psi1.log_slope(), psi2.log_slope());
}

double distance(const SmoothMap& psi1, const SmoothMap& psi2, double rtol) {
    auto g = [&](double x) {
        double s1 = psi1.d1(x), s2 = psi2.d1(x);
        if (s1 <= kSlopeFloor || s2 <= kSlopeFloor) throw NonPositiveSlope();
        return std::log(s1) - std::log(s2);
    };
    return tv_refined(g, rtol);
}

double legacy_upper_bound(const MonotonePwl& psi) {
    StepFunction ls = psi.log_slope();
    return tv(ls) + std::abs(ls.values.front()) + std::abs(ls.values.back());
}

double legacy_upper_bound(const SmoothMap& psi, double rtol) {
    double s0 = psi.d1(0.0), s1 = psi.d1(1.0);
    if (s0 <= kSlopeFloor || s1 <= kSlopeFloor) throw NonPositiveSlope();
    return complexity(psi, rtol) + std::abs(std::log(s0)) + std::abs(std::log(s1));
}

double legacy_upper_bound(const SmoothMap& psi1, const SmoothMap& psi2, double rtol) {
    double r0 = psi1.d1(0.0) / psi2.d1(0.0);
    double r1 = psi1.d1(1.0) / psi2.d1(1.0);
    if (r0 <= kSlopeFloor || r1 <= kSlopeFloor) throw NonPositiveSlope();
    return distance(psi1, psi2, rtol) + std::abs(std::log(r0)) + std::abs(std::log(r1));
}

namespace {

MonotonePwl normalized_cumulative(std::vector<double> xs, const std::vector<double>& weights) {
    // weights[i] is the integrand value on cell [xs[i], xs[i+1]] (step case) or
    // at node xs[i] (trapezoid case handled by caller via cell averages).
    std::vector<double> ys(xs.size(), 0.0);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        ys[i + 1] = ys[i] + weights[i] * (xs[i + 1] - xs[i]);
    double total = ys.back();
    if (total <= 0.0) throw NonPositiveSlope("degenerate geodesic integrand");
    for (double& y : ys) y /= total;
    ys.front() = 0.0;
    ys.back() = 1.0;
    return MonotonePwl(std::move(xs), std::move(ys));
}

}  // namespace

MonotonePwl geodesic_point(const SmoothMap& psi1, const SmoothMap& psi2, double t, int n) {
    std::vector<double> xs(n + 1), w(n);
    for (int i = 0; i <= n; ++i) xs[i] = static_cast<double>(i) / n;
    xs[0] = 0.0;
    xs[n] = 1.0;
    auto integrand = [&](double x) {
        double s1 = psi1.d1(x), s2 = psi2.d1(x);
        if (s1 <= kSlopeFloor || s2 <= kSlopeFloor) throw NonPositiveSlope();
        return std::pow(s1, 1.0 - t) * std::pow(s2, t);
    };
    double prev = integrand(xs[0]);
    for (int i = 0; i < n; ++i) {
        double cur = integrand(xs[i + 1]);
        w[i] = 0.5 * (prev + cur);
        prev = cur;
    }
    return normalized_cumulative(std::move(xs), w);
}

MonotonePwl geodesic_point(const MonotonePwl& psi1, const MonotonePwl& psi2, double t, int n) {
    StepFunction a = psi1.log_slope(), b = psi2.log_slope();
    StepFunction merged = step_difference(a, b);
    // Exact piecewise-linear cumulative of the step integrand, resampled on
    // the merged breakpoints plus the uniform nodes.
    std::vector<double> xs = merged.breaks;
    for (int i = 1; i < n; ++i) xs.push_back(static_cast<double>(i) / n);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [](double p, double q) { return q - p <= 1e-13; }),
             xs.end());
    xs.front() = 0.0;
    xs.back() = 1.0;
    std::vector<double> w(xs.size() - 1);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        double mid = 0.5 * (xs[i] + xs[i + 1]);
        w[i] = std::exp((1.0 - t) * a(mid) + t * b(mid));
    }
    return normalized_cumulative(std::move(xs), w);
}

namespace {

// TV of the slope quotient of two increasing pwl maps sharing one breakpoint
// grid: both arise from the same path discretization.
double shared_grid_norm(const MonotonePwl& from, const MonotonePwl& to) {
    if (from.xs().size() != to.xs().size())
        throw DomainError("path points must share one breakpoint grid");
    const auto& xs = from.xs();
    double total = 0.0;
    double prev_ratio = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        double dfrom = from.ys()[i + 1] - from.ys()[i];
        double dto = to.ys()[i + 1] - to.ys()[i];
        if (dfrom <= 0.0) throw NonPositiveSlope();
        double ratio = (dto - dfrom) / dfrom;
        if (i > 0) total += std::abs(ratio - prev_ratio);
        prev_ratio = ratio;
    }
    return total;
}

template <typename PathPoint>
double length_of_path(int k, const PathPoint& point_at) {
    std::vector<MonotonePwl> path;
    path.reserve(k + 1);
    for (int j = 0; j <= k; ++j) path.push_back(point_at(static_cast<double>(j) / k));
    std::vector<double> norms(k);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < k; ++j) norms[j] = shared_grid_norm(path[j], path[j + 1]);
    double total = 0.0;
    for (double v : norms) total += v;
    return total;
}

template <typename PathPoint>
double length_of_path_serial(int k, const PathPoint& point_at) {
    std::vector<MonotonePwl> path;
    path.reserve(k + 1);
    for (int j = 0; j <= k; ++j) path.push_back(point_at(static_cast<double>(j) / k));
    double total = 0.0;
    for (int j = 0; j < k; ++j) total += shared_grid_norm(path[j], path[j + 1]);
    return total;
}

}  // namespace

double geodesic_length(const SmoothMap& psi1, const SmoothMap& psi2, int k, int n) {
    return length_of_path(k, [&](double t) { return geodesic_point(psi1, psi2, t, n); });
}

double geodesic_length_serial(const SmoothMap& psi1, const SmoothMap& psi2, int k, int n) {
    return length_of_path_serial(k, [&](double t) { return geodesic_point(psi1, psi2, t, n); });
}

double geodesic_length(const MonotonePwl& psi1, const MonotonePwl& psi2, int k, int n) {
    return length_of_path(k, [&](double t) { return geodesic_point(psi1, psi2, t, n); });
}

SampledPair::SampledPair(std::vector<double> z_, std::vector<double> x_, std::vector<double> y_)
    : z(std::move(z_)), x(std::move(x_)), y(std::move(y_)) {
    if (z.size() < 2 || z.size() != x.size() || z.size() != y.size())
        throw NonMonotoneSamples("sampled pair needs matching node/image lists, m >= 2");
    if (x.front() != 0.0 || y.front() != 0.0 || x.back() != 1.0 || y.back() != 1.0)
        throw BoundaryViolation("sampled images must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        if (!(z[i + 1] > z[i]) || !(x[i + 1] > x[i]) || !(y[i + 1] > y[i]))
            throw NonMonotoneSamples();
    }
}

SampledPair SampledPair::uniform(const SmoothMap& psi1, const SmoothMap& psi2, int m) {
    std::vector<double> z(m), x(m), y(m);
    for (int i = 0; i < m; ++i) {
        z[i] = static_cast<double>(i) / (m - 1);
        x[i] = psi1.f(z[i]);
        y[i] = psi2.f(z[i]);
    }
    z[0] = x[0] = y[0] = 0.0;
    z[m - 1] = x[m - 1] = y[m - 1] = 1.0;
    return SampledPair(std::move(z), std::move(x), std::move(y));
}

double sampled_distance(const SampledPair& pair) {
    const std::size_t m = pair.size();
    double total = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        double r = (pair.y[i + 1] - pair.y[i]) / (pair.x[i + 1] - pair.x[i]);
        if (r <= kSlopeFloor) throw NonPositiveSlope();
        double lr = std::log(r);
        if (i > 0) total += std::abs(lr - prev);
        prev = lr;
    }
    return total;
}

double discrete_local_norm(std::span<const double> u_at_z, const MonotonePwl& psi,
                           std::span<const double> z) {
    if (z.size() < 2 || z.size() != u_at_z.size())
        throw NonMonotoneSamples("discrete local norm needs matching node/value lists");
    const int m = static_cast<int>(z.size());
    std::vector<double> nodes(m);
    for (int i = 0; i < m; ++i) nodes[i] = psi(z[i]);
    bool uniform = true;
    for (int i = 0; i < m; ++i) {
        if (std::abs(nodes[i] - static_cast<double>(i) / (m - 1)) > 1e-12) {
            uniform = false;
            break;
        }
    }
    std::vector<double> vals(u_at_z.begin(), u_at_z.end());
    if (uniform) return min_weight(InterpProblem{m - 1, vals});
    return lp_oracle_nodes(nodes, vals);
}

}  // namespace flowdepth
