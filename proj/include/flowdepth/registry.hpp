#ifndef FLOWDEPTH_REGISTRY_HPP
#define FLOWDEPTH_REGISTRY_HPP

#include <string>
#include <vector>

#include "flowdepth/core1d.hpp"

namespace flowdepth {

// Builtin increasing map of [0,1] with analytic derivatives up to third order.
// The registry is the single source of truth for derivatives of smooth maps;
// total-variation quadrature never falls back to finite differences for them.
struct SmoothMap {
    std::string name;
    Fn f, d1, d2, d3;
};

/// Parse a map spec: "identity", "exp_map", "eps_quad:<eps>", "osc:<n>",
/// "fig1", "fig2", "fig3". Throws DomainError on unknown names.
SmoothMap make_map(const std::string& spec);

std::vector<std::string> registry_names();

MonotonePwl to_pwl(const SmoothMap& m, int n);

/// Barycentric combination a*fig1 + b*fig2 + c*fig3 with a+b+c=1, a,b,c >= 0.
SmoothMap barycentric_map(double a, double b, double c);

}  // namespace flowdepth

#endif
