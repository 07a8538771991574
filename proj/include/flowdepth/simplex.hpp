#ifndef FLOWDEPTH_SIMPLEX_HPP
#define FLOWDEPTH_SIMPLEX_HPP

#include <vector>

namespace flowdepth {

struct LpResult {
    enum class Status { Optimal, Unbounded, Infeasible };
    Status status;
    double objective = 0.0;
    std::vector<double> x;
};

/// min c'x subject to A x = b, x >= 0, by a dense two-phase primal simplex
/// with Bland's anti-cycling rule. Pivot tolerance 1e-11.
LpResult solve_lp(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double> c);

}  // namespace flowdepth

#endif
