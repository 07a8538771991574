#ifndef FLOWDEPTH_L1_INTERP_HPP
#define FLOWDEPTH_L1_INTERP_HPP

#include <span>
#include <vector>

#include "flowdepth/core1d.hpp"

namespace flowdepth {

// Exact solver for the minimal-weight shallow-ReLU interpolation problem on a
// uniform grid, a constructive witness, and an independent LP oracle.

/// Values u(i/N), i = 0..N, to interpolate on the uniform grid.
struct InterpProblem {
    int N;
    std::vector<double> u_vals;  // N+1 entries
};

/// Interpolating network u~(x) = sum_i w_i relu(x - i/N) + v_i relu(i/N - x) + C.
struct InterpWitness {
    int N;
    std::vector<double> w, v;  // N+1 entries each
    double C = 0.0;

    double eval(double x) const;
    double weight_sum() const;
    /// max_i |u~(i/N) - u(i/N)|
    double feasibility_residual(const InterpProblem& p) const;
};

/// Closed-form optimum: sum |k_i| + dist(-N(u(1/N)-u(0)), [K-, K+]) with
/// k_i the scaled second differences.
double min_weight(const InterpProblem& p);

/// Equivalent symmetric expression; equals min_weight identically.
double min_weight_symmetric(const InterpProblem& p);

/// Feasible witness achieving min_weight. The interior v_i are filled greedily
/// in ascending index order inside their boxes, which makes the witness
/// deterministic.
InterpWitness witness(const InterpProblem& p);

/// LP value of the same problem via the dense simplex; the anti-drift anchor
/// that min_weight is tested against.
double lp_oracle(const InterpProblem& p);

/// Arbitrary-node variant: interpolate values[j] at nodes[j] with kinks at the
/// nodes. Node count capped at 64 (dense solver scale).
double lp_oracle_nodes(std::span<const double> nodes, std::span<const double> values);

struct AsymptoticRow {
    int N;
    double S_N;
};
struct AsymptoticTable {
    std::vector<AsymptoticRow> rows;
    double tv_derivative;
};

/// S_N for N = 2^j, j = 2..12, together with TV(u') from the analytic
/// derivative. |S_N - TV(u')| must shrink to zero in the tail.
AsymptoticTable asymptotic_check(const Fn& u, const Fn& du, double rtol = 1e-6);

namespace testhooks {
// Flips the sign of the interval-distance term of min_weight. Only the verify
// fault-injection path sets this; it exists to prove the LP-equivalence
// property can fail loudly.
inline bool flip_min_sn_dist_sign = false;
}  // namespace testhooks

}  // namespace flowdepth

#endif
