#ifndef FLOWDEPTH_RELU1D_HPP
#define FLOWDEPTH_RELU1D_HPP

#include <span>
#include <vector>

#include "flowdepth/core1d.hpp"
#include "flowdepth/registry.hpp"

namespace flowdepth {

// The flow metric for the width-2 ReLU family on [0,1]: local norms are total
// variations of derivative quotients, the global distance is the TV of the
// log-slope difference, and geodesics are normalized geometric interpolants.

/// Scalar perturbation with an analytic derivative, u(0)=u(1)=0.
struct Perturbation {
    Fn f, d1;
};

/// ||u||_psi = TV(u'/psi'), exact on merged breakpoints.
double local_norm(const GridFunction& u, const MonotonePwl& psi);
/// Analytic variant: TV of u'(x)/psi'(x) by dyadic refinement.
double local_norm(const Perturbation& u, const SmoothMap& psi, double rtol = 1e-6);

double complexity(const MonotonePwl& psi);
double complexity(const SmoothMap& psi, double rtol = 1e-6);

double distance(const MonotonePwl& psi1, const MonotonePwl& psi2);
double distance(const SmoothMap& psi1, const SmoothMap& psi2, double rtol = 1e-6);

/// Constructive bound: TV(ln psi') plus endpoint log-slope magnitudes.
double legacy_upper_bound(const MonotonePwl& psi);
double legacy_upper_bound(const SmoothMap& psi, double rtol = 1e-6);
/// Pair form via right-invariance: distance + endpoint slope-ratio terms.
double legacy_upper_bound(const SmoothMap& psi1, const SmoothMap& psi2, double rtol = 1e-6);

/// Point on the constant-speed path from psi1 to psi2 at parameter t in [0,1].
/// Smooth inputs use composite-trapezoid quadrature on n+1 nodes; piecewise-
/// linear inputs are integrated exactly on merged breakpoints.
MonotonePwl geodesic_point(const SmoothMap& psi1, const SmoothMap& psi2, double t, int n);
MonotonePwl geodesic_point(const MonotonePwl& psi1, const MonotonePwl& psi2, double t, int n);

/// Riemann-sum length of the path over k uniform parameter steps; converges to
/// distance(psi1, psi2). The step loop is order-independent and runs under
/// OpenMP; the serial twin is the reference the tests compare against.
double geodesic_length(const SmoothMap& psi1, const SmoothMap& psi2, int k, int n);
double geodesic_length_serial(const SmoothMap& psi1, const SmoothMap& psi2, int k, int n);
double geodesic_length(const MonotonePwl& psi1, const MonotonePwl& psi2, int k, int n);

/// Common sampling nodes z (including 0 and 1) with the images of two maps.
struct SampledPair {
    std::vector<double> z;  // ascending, z.front()==0, z.back()==1
    std::vector<double> x;  // psi1(z_i), strictly increasing, 0..1
    std::vector<double> y;  // psi2(z_i), strictly increasing, 0..1

    SampledPair(std::vector<double> z_, std::vector<double> x_, std::vector<double> y_);
    static SampledPair uniform(const SmoothMap& psi1, const SmoothMap& psi2, int m);
    std::size_t size() const { return z.size(); }
};

/// Finite-sample transport distance: sum of |log secant-slope jumps| of the
/// pair; the minimum over interpolating maps is attained by the piecewise-
/// linear interpolants.
double sampled_distance(const SampledPair& pair);

/// Minimal weight sum over shallow ReLU interpolants matching values u(z_i) at
/// the transported nodes psi(z_i). Uniform transported nodes dispatch to the
/// closed form; arbitrary nodes use the LP solver.
double discrete_local_norm(std::span<const double> u_at_z, const MonotonePwl& psi,
                           std::span<const double> z);

}  // namespace flowdepth

#endif
