#ifndef FLOWDEPTH_CIRCLE_HPP
#define FLOWDEPTH_CIRCLE_HPP

#include <string>
#include <vector>

#include "flowdepth/core1d.hpp"

namespace flowdepth {

// The normalized-layer example on the circle: Fourier coefficients of the
// shifted-ReLU kernel g_b(x) = relu(cos x - cos beta), deconvolution bounds
// for the local transport norm, and the explicit curve-length upper bound.

/// Samples of a real function at 2*pi*i/n, i = 0..n-1; n a power of two >= 16.
struct PeriodicGrid {
    int n = 0;
    std::vector<double> values;

    PeriodicGrid() = default;
    PeriodicGrid(int n_, std::vector<double> v);
    static PeriodicGrid sample(const Fn& f, int n);
    double theta(int i) const;
};

/// Orientation-preserving circle diffeomorphism via its lift, with analytic
/// derivatives from the registry. Builtins: "identity", "warp:<c>,<m>"
/// (theta + c sin(m theta), |c m| < 1).
struct CircleMap {
    std::string name;
    Fn f, d1, d2, d3;
};

CircleMap make_circle_map(const std::string& spec);

/// Inverse of the lift by monotone bisection to 1e-12.
double circle_inverse(const CircleMap& psi, double x);

/// Cosine coefficient (1/2pi) int relu(cos x - cos beta) cos(n x) dx in
/// closed form; n >= 1.
double gb_coeff(int n, double beta);
/// Mean (1/2pi) int relu(cos x - cos beta) dx = (sin beta - beta cos beta)/pi.
double gb_mean(double beta);

struct DeconvResult {
    PeriodicGrid rho;
    double l2_norm = 0.0;   // L2([0, 2pi]) norm of rho
    double l1_bound = 0.0;  // sqrt(2 pi) * l2_norm
};

/// Solve g_b (*) rho = f_M mode by mode (rho_hat(n) = f_hat(n)/g_hat(n) for
/// |n| <= M), where (*) is normalized periodic convolution
/// (1/2pi) int g(x - t) rho(t) dt. Throws ZeroDivisor when some |g_hat(n)|
/// falls under 1e-14 (inadmissible beta).
DeconvResult deconvolve(const PeriodicGrid& f, double beta, int M);

/// Normalized periodic convolution of a kernel grid with rho.
PeriodicGrid convolve(const PeriodicGrid& g, const PeriodicGrid& rho);

/// C1 * ||(u o psi^{-1})'''||_L2 + C2 * ||u o psi^{-1}||_C with the third
/// derivative taken spectrally on the mode-capped transform.
double local_bound(const PeriodicGrid& u, const CircleMap& psi, double beta,
                   double C1, double C2, int mode_cap);

// Rational coefficients of the curve-length functional.
double rho_A(double rho);
double rho_B(double rho);
double rho_C(double rho);

struct GlobalBound {
    double J = 0.0;
    double sup_term = 0.0;
};

/// J = int [A(rho) (D^2 rho)^2 + B(rho) (D rho)^2 D^2 rho + C(rho) (D rho)^4]
/// with rho = (psi1'/psi2') o psi2^{-1}, and sup_term = |psi1 - psi2|_C on
/// lifts. Derivatives of rho come from registry derivatives by the chain rule.
GlobalBound global_bound_functional(const CircleMap& psi1, const CircleMap& psi2, int grid);

}  // namespace flowdepth

#endif
