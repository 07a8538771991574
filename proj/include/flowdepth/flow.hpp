#ifndef FLOWDEPTH_FLOW_HPP
#define FLOWDEPTH_FLOW_HPP

#include <random>
#include <vector>

#include "flowdepth/core1d.hpp"
#include "flowdepth/l1_interp.hpp"
#include "flowdepth/registry.hpp"

namespace flowdepth {

struct ReluTerm {
    double w, a, b;  // w * relu(a*x + b); a == 0 contributes the constant w*relu(b)
};

// Piecewise-linear vector field on the line given as a sum of ReLU terms.
// The derived cell decomposition (kinks at -b/a) backs exact flows.
class ReluField1D {
  public:
    explicit ReluField1D(std::vector<ReluTerm> terms);

    double eval(double x) const;
    const std::vector<ReluTerm>& terms() const { return terms_; }

    /// sum |w_i a_i|, the family weight cost.
    double weight_cost() const;
    /// Membership in the admissible family: vanishing endpoints, cost <= 1.
    bool in_family(double tol = 1e-12) const;
    /// TV of the field's derivative (sum of |slope jumps| at interior kinks).
    double derivative_tv() const;

    ReluField1D negated() const;
    ReluField1D scaled(double factor) const;
    /// Subtracts the linear interpolant of the endpoint residuals, making
    /// f(0) and f(1) exactly zero.
    ReluField1D with_pinned_endpoints() const;

    // Cell decomposition over the whole line: kinks_ sorted ascending; cell i
    // spans (kinks_[i-1], kinks_[i]) with affine f(x) = slope*x + intercept.
    const std::vector<double>& kinks() const { return kinks_; }
    std::size_t cell_of(double x, double direction) const;
    void cell_coeffs(std::size_t cell, double& slope, double& intercept) const;

  private:
    std::vector<ReluTerm> terms_;
    std::vector<double> kinks_;        // interior cell boundaries
    std::vector<double> kink_values_;  // f at each kink
    std::vector<double> slopes_;       // one per cell (kinks_.size()+1 cells)
};

/// Build the interpolation witness as a vector field with pinned endpoints.
ReluField1D field_from_witness(const InterpWitness& wit);

/// Random admissible family member (unit-slope terms, pinned endpoints,
/// weight cost scaled to `cost`).
template <typename Rng>
ReluField1D random_family_field(Rng& rng, int kinks, double cost);

/// Exact flow of the field: event-driven integration through linearity cells,
/// closed-form inside each cell. Exact to floating rounding.
double flow_exact(const ReluField1D& field, double t, double x0);

struct ScheduleSegment {
    ReluField1D field;
    double duration;
};

/// Ordered list of (field, duration) pairs; an executable control program.
struct ControlSchedule {
    std::vector<ScheduleSegment> segments;
    double total_time() const;
};

/// Composite flow map evaluated at n+1 uniform initial points. The per-point
/// integrations are independent; this entry point runs them under OpenMP and
/// flow_map_serial is the reference twin.
MonotonePwl flow_map(const ControlSchedule& schedule, int n);
MonotonePwl flow_map_serial(const ControlSchedule& schedule, int n);

/// Forward-Euler discretization of the same schedule.
MonotonePwl resnet_iterate(const ControlSchedule& schedule, int steps_per_segment, int n);

struct RealizeReport {
    int k = 0, N = 0;
    double total_time = 0.0;
    double budget = 0.0;
    double sup_error = 0.0;
    ControlSchedule schedule;
    MonotonePwl achieved = MonotonePwl::identity();
};

/// Drive the identity to `target` along the constant-speed path: each step
/// fits the transported velocity with a minimal-weight ReLU interpolant on N
/// nodes, rescales it into the family, and flows for the witness weight sum.
/// Throws BudgetExceeded when the total time passes (1+delta) * complexity.
RealizeReport realize_geodesic(const SmoothMap& target, double delta, int k, int N,
                               int grid = 4096);

template <typename Rng>
ReluField1D random_family_field(Rng& rng, int kinks, double cost) {
    std::vector<ReluTerm> terms;
    terms.reserve(kinks);
    std::uniform_real_distribution<double> unit(0.05, 0.95);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < kinks; ++i) {
        double kink = unit(rng);
        double w = gauss(rng);
        if (w == 0.0) w = 1.0;
        bool up = (gauss(rng) > 0.0);
        terms.push_back(up ? ReluTerm{w, 1.0, -kink} : ReluTerm{w, -1.0, kink});
    }
    ReluField1D pinned = ReluField1D(std::move(terms)).with_pinned_endpoints();
    double c = pinned.weight_cost();
    if (c <= 0.0) return pinned;
    return pinned.scaled(cost / c);
}

}  // namespace flowdepth

#endif
