#include "flowdepth/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "flowdepth/relu1d.hpp"

namespace flowdepth {

double l2_to_identity(const SmoothMap& m, int grid) {
    double acc = 0.0;
    for (int i = 0; i <= grid; ++i) {
        double x = static_cast<double>(i) / grid;
        double d = m.f(x) - x;
        double w = (i == 0 || i == grid) ? 0.5 : 1.0;
        acc += w * d * d;
    }
    return std::sqrt(acc / grid);
}

namespace {

std::vector<BaryRow> field_impl(int g, ContourMetric metric, int grid, bool parallel) {
    if (g < 3) throw DomainError("barycentric resolution must be at least 3");
    std::vector<BaryRow> rows;
    for (int i = 0; i <= g; ++i)
        for (int j = 0; j <= g - i; ++j)
            rows.push_back({static_cast<double>(i) / g, static_cast<double>(j) / g,
                            static_cast<double>(g - i - j) / g, 0.0});
    const int count = static_cast<int>(rows.size());
    auto eval_one = [&](int idx) {
        const BaryRow& r = rows[idx];
        SmoothMap m = barycentric_map(r.a, r.b, r.c);
        if (metric == ContourMetric::Flow)
            return complexity(m);  // distance to the identity at the center
        return l2_to_identity(m, grid);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int idx = 0; idx < count; ++idx) rows[idx].value = eval_one(idx);
    } else {
        for (int idx = 0; idx < count; ++idx) rows[idx].value = eval_one(idx);
    }
    return rows;
}

}  // namespace

std::vector<BaryRow> contour_field(int g, ContourMetric metric, int grid) {
    return field_impl(g, metric, grid, true);
}

std::vector<BaryRow> contour_field_serial(int g, ContourMetric metric, int grid) {
    return field_impl(g, metric, grid, false);
}

double rank_correlation(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size() || u.size() < 2)
        throw DomainError("rank correlation needs two equal-length lists");
    auto ranks = [](const std::vector<double>& w) {
        std::vector<int> order(w.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
        std::vector<double> r(w.size());
        for (std::size_t pos = 0; pos < order.size(); ++pos) r[order[pos]] = pos;
        return r;
    };
    std::vector<double> ru = ranks(u), rv = ranks(v);
    double n = static_cast<double>(u.size());
    double mean = (n - 1.0) / 2.0;
    double num = 0.0, du = 0.0, dv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        num += (ru[i] - mean) * (rv[i] - mean);
        du += (ru[i] - mean) * (ru[i] - mean);
        dv += (rv[i] - mean) * (rv[i] - mean);
    }
    return num / std::sqrt(du * dv);
}

}  // namespace flowdepth
