#include "flowdepth/l1_interp.hpp"

#include <algorithm>
#include <cmath>

#include "flowdepth/simplex.hpp"

namespace flowdepth {

namespace {

double relu(double x) { return x > 0.0 ? x : 0.0; }

void check_problem(const InterpProblem& p) {
    if (p.N < 2) throw DomainError("interpolation problem needs N >= 2");
    if (p.u_vals.size() != static_cast<std::size_t>(p.N + 1))
        throw DomainError("interpolation problem needs N+1 values");
}

struct SecondDifferences {
    std::vector<double> k;  // k_1..k_{N-1}
    double sum_abs = 0.0, k_plus = 0.0, k_minus = 0.0;
    double first_secant = 0.0;  // N(u(1/N) - u(0))
    double last_secant = 0.0;   // N(u(1) - u((N-1)/N))
};

SecondDifferences second_differences(const InterpProblem& p) {
    const int N = p.N;
    const auto& u = p.u_vals;
    SecondDifferences d;
    d.k.resize(N - 1);
    for (int i = 1; i < N; ++i) {
        double ki = N * (u[i + 1] - 2.0 * u[i] + u[i - 1]);
        d.k[i - 1] = ki;
        d.sum_abs += std::abs(ki);
        d.k_plus += std::max(ki, 0.0);
        d.k_minus += std::min(ki, 0.0);
    }
    d.first_secant = N * (u[1] - u[0]);
    d.last_secant = N * (u[N] - u[N - 1]);
    return d;
}

double dist_to_interval(double p, double lo, double hi) {
    return std::max({lo - p, p - hi, 0.0});
}

}  // namespace

double InterpWitness::eval(double x) const {
    double acc = 0.0;
    for (int i = 0; i <= N; ++i) {
        double node = static_cast<double>(i) / N;
        acc += w[i] * relu(x - node) + v[i] * relu(node - x);
    }
    return acc + C;
}

double InterpWitness::weight_sum() const {
    double s = 0.0;
    for (int i = 0; i <= N; ++i) s += std::abs(w[i]) + std::abs(v[i]);
    return s;
}

double InterpWitness::feasibility_residual(const InterpProblem& p) const {
    double worst = 0.0;
    for (int i = 0; i <= N; ++i)
        worst = std::max(worst, std::abs(eval(static_cast<double>(i) / N) - p.u_vals[i]));
    return worst;
}

double min_weight(const InterpProblem& p) {
    check_problem(p);
    auto d = second_differences(p);
    double dist = dist_to_interval(-d.first_secant, d.k_minus, d.k_plus);
    if (testhooks::flip_min_sn_dist_sign) dist = -dist;
    return d.sum_abs + dist;
}

double min_weight_symmetric(const InterpProblem& p) {
    check_problem(p);
    auto d = second_differences(p);
    return d.sum_abs +
           0.5 * std::max(std::abs(d.first_secant + d.last_secant) - d.sum_abs, 0.0);
}

InterpWitness witness(const InterpProblem& p) {
    check_problem(p);
    const int N = p.N;
    auto d = second_differences(p);

    InterpWitness wit;
    wit.N = N;
    wit.w.assign(N + 1, 0.0);
    wit.v.assign(N + 1, 0.0);

    double target = std::clamp(-d.first_secant, d.k_minus, d.k_plus);
    double remaining = target;
    for (int i = 1; i < N; ++i) {
        double lo = std::min(d.k[i - 1], 0.0), hi = std::max(d.k[i - 1], 0.0);
        double vi = std::clamp(remaining, lo, hi);
        wit.v[i] = vi;
        remaining -= vi;
    }
    wit.w[0] = d.first_secant + target;
    for (int i = 1; i < N; ++i) wit.w[i] = d.k[i - 1] - wit.v[i];

    double moment = 0.0;
    for (int i = 1; i <= N; ++i) moment += i * wit.v[i];
    wit.C = p.u_vals[0] - moment / N;
    return wit;
}

double lp_oracle(const InterpProblem& p) {
    check_problem(p);
    std::vector<double> nodes(p.N + 1);
    for (int i = 0; i <= p.N; ++i) nodes[i] = static_cast<double>(i) / p.N;
    return lp_oracle_nodes(nodes, p.u_vals);
}

double lp_oracle_nodes(std::span<const double> nodes, std::span<const double> values) {
    const int m = static_cast<int>(nodes.size());
    if (m < 2 || values.size() != nodes.size())
        throw DomainError("LP oracle needs matching nodes/values, m >= 2");
    if (m > 64) throw DomainError("LP oracle capped at 64 nodes");
    for (int i = 0; i + 1 < m; ++i)
        if (!(nodes[i + 1] > nodes[i])) throw NonMonotoneSamples("LP nodes must ascend");

    // Variables: w+_i, w-_i, v+_i, v-_i (i = 0..m-1), then C+, C-.
    const int nvars = 4 * m + 2;
    std::vector<std::vector<double>> A(m, std::vector<double>(nvars, 0.0));
    std::vector<double> b(values.begin(), values.end());
    std::vector<double> c(nvars, 1.0);
    c[nvars - 2] = c[nvars - 1] = 0.0;
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            double up = relu(nodes[j] - nodes[i]);
            double dn = relu(nodes[i] - nodes[j]);
            A[j][4 * i + 0] = up;
            A[j][4 * i + 1] = -up;
            A[j][4 * i + 2] = dn;
            A[j][4 * i + 3] = -dn;
        }
        A[j][nvars - 2] = 1.0;
        A[j][nvars - 1] = -1.0;
    }
    LpResult res = solve_lp(std::move(A), std::move(b), std::move(c));
    if (res.status == LpResult::Status::Unbounded) throw LpUnbounded();
    if (res.status == LpResult::Status::Infeasible) throw LpInfeasible();
    return res.objective;
}

AsymptoticTable asymptotic_check(const Fn& u, const Fn& du, double rtol) {
    AsymptoticTable table;
    for (int j = 2; j <= 12; ++j) {
        int N = 1 << j;
        std::vector<double> vals(N + 1);
        for (int i = 0; i <= N; ++i) vals[i] = u(static_cast<double>(i) / N);
        table.rows.push_back({N, min_weight(InterpProblem{N, std::move(vals)})});
    }
    table.tv_derivative = tv_refined(du, rtol);
    return table;
}

}  // namespace flowdepth
