#ifndef FLOWDEPTH_LIFT2D_HPP
#define FLOWDEPTH_LIFT2D_HPP

#include <array>
#include <string>

#include "flowdepth/core1d.hpp"

namespace flowdepth {

using Vec2 = std::array<double, 2>;

// Dimension-doubling construction: a scalar target f on an interval K is
// realized as projection . flow . embedding in the plane, where the flow
// follows the cutoff vertical field X(u,v) = eta(|(u,v)|) * (0, kappa*f(u/lambda)).

struct LiftConfig {
    std::string fn_name;  // registry key: "zero", "quad", "sin3"
    Fn f;
    double k0 = -1.0, k1 = 1.0;  // target interval K
    double lambda = 0.5, kappa = 0.3;
};

/// Parse "zero" | "quad" | "sin3" with per-target default scalings.
LiftConfig make_lift_config(const std::string& fn, double k0, double k1,
                            double lambda, double kappa);

/// Quintic smoothstep cutoff in the radius: 1 on r <= 1, 0 on r >= 3/2, C^2.
double cutoff_eta(double r);

Vec2 cutoff_field(const LiftConfig& cfg, const Vec2& p);

/// Worst-case slack of the segment condition over a 1e3 grid on K: positive
/// means every lifted segment {(u, t*kappa*f(u/lambda))} stays inside B_1.
double segment_margin(const LiftConfig& cfg, int grid = 1000);

/// RK4 integration of the cutoff field with adaptive step doubling
/// (tolerance 1e-10). Points at radius >= 3/2 are returned unchanged.
Vec2 lift_flow(const LiftConfig& cfg, double t, const Vec2& p, double tol = 1e-10);
/// Same integration backward in time (field negated).
Vec2 lift_flow_reversed(const LiftConfig& cfg, double t, const Vec2& p, double tol = 1e-10);

struct LiftReport {
    double sup_error = 0.0;
    double segment_margin = 0.0;
};

/// max over m grid points u in K of |beta(flow_1(alpha(u))) - f(u)|.
/// Throws ConfigViolation when the segment condition fails. Grid points
/// integrate independently; the serial twin is the test reference.
LiftReport verify_factorization(const LiftConfig& cfg, int m);
LiftReport verify_factorization_serial(const LiftConfig& cfg, int m);

}  // namespace flowdepth

#endif
