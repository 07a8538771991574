#include "flowdepth/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace flowdepth {

namespace {

constexpr double kPivotTol = 1e-11;

struct Tableau {
    std::size_t m, n;                     // rows, columns (without rhs)
    std::vector<std::vector<double>> t;   // m rows of n+1 (last = rhs)
    std::vector<double> obj;              // n+1 reduced-cost row (last = -value)
    std::vector<std::size_t> basis;       // basic variable per row

    void pivot(std::size_t r, std::size_t c) {
        double p = t[r][c];
        for (double& v : t[r]) v /= p;
        t[r][c] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            double f = t[i][c];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[r][j];
            t[i][c] = 0.0;
        }
        double f = obj[c];
        if (f != 0.0) {
            for (std::size_t j = 0; j <= n; ++j) obj[j] -= f * t[r][j];
            obj[c] = 0.0;
        }
        basis[r] = c;
    }

    // Bland: entering = lowest eligible index, leaving = lowest basic index
    // among minimum-ratio rows. Returns false when optimal, throws-free.
    enum class Step { Optimal, Pivoted, Unbounded };
    Step step(std::size_t enter_limit) {
        std::size_t enter = n;
        for (std::size_t j = 0; j < enter_limit; ++j) {
            if (obj[j] < -kPivotTol) {
                enter = j;
                break;
            }
        }
        if (enter == n) return Step::Optimal;
        std::size_t leave = m;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] > kPivotTol) {
                double ratio = t[i][n] / t[i][enter];
                if (ratio < best - kPivotTol ||
                    (ratio < best + kPivotTol && (leave == m || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) return Step::Unbounded;
        pivot(leave, enter);
        return Step::Pivoted;
    }
};

}  // namespace

namespace {

enum class PhaseEnd { Optimal, Unbounded, Stalled };

PhaseEnd run_phase(Tableau& tab, std::size_t enter_limit) {
    // Bland's rule precludes cycling; the cap turns any residual numerical
    // stall into a loud failure instead of a hang.
    const long limit = 10000 + 200 * static_cast<long>(tab.n);
    for (long it = 0; it < limit; ++it) {
        auto s = tab.step(enter_limit);
        if (s == Tableau::Step::Optimal) return PhaseEnd::Optimal;
        if (s == Tableau::Step::Unbounded) return PhaseEnd::Unbounded;
    }
    return PhaseEnd::Stalled;
}

}  // namespace

LpResult solve_lp(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double> c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0.0) {
            for (double& v : A[i]) v = -v;
            b[i] = -b[i];
        }
    }

    Tableau tab;
    tab.m = m;
    tab.n = n + m;  // original + artificial
    tab.t.assign(m, std::vector<double>(tab.n + 1, 0.0));
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = A[i][j];
        tab.t[i][n + i] = 1.0;
        tab.t[i][tab.n] = b[i];
        tab.basis[i] = n + i;
    }

    // Phase 1: minimize the artificial sum.
    tab.obj.assign(tab.n + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= tab.n; ++j)
            if (j < n || j == tab.n) tab.obj[j] -= tab.t[i][j];
    switch (run_phase(tab, n)) {  // artificials never enter
        case PhaseEnd::Unbounded: return {LpResult::Status::Unbounded, 0.0, {}};
        case PhaseEnd::Stalled: return {LpResult::Status::Infeasible, 0.0, {}};
        case PhaseEnd::Optimal: break;
    }
    double phase1 = -tab.obj[tab.n];
    if (phase1 > 1e-8) return {LpResult::Status::Infeasible, 0.0, {}};

    // Drive leftover artificial basics out where a real pivot exists.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(tab.t[i][j]) > kPivotTol) {
                tab.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2 objective from the real costs.
    tab.obj.assign(tab.n + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) tab.obj[j] = c[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue;
        double cb = c[tab.basis[i]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j <= tab.n; ++j) tab.obj[j] -= cb * tab.t[i][j];
    }
    switch (run_phase(tab, n)) {
        case PhaseEnd::Unbounded: return {LpResult::Status::Unbounded, 0.0, {}};
        case PhaseEnd::Stalled: return {LpResult::Status::Infeasible, 0.0, {}};
        case PhaseEnd::Optimal: break;
    }

    LpResult res;
    res.status = LpResult::Status::Optimal;
    res.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.n];
    double obj = 0.0;
    for (std::size_t j = 0; j < n; ++j) obj += c[j] * res.x[j];
    res.objective = obj;
    return res;
}

}  // namespace flowdepth
