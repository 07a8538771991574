#include "flowdepth/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "flowdepth/fft.hpp"

namespace flowdepth {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<std::complex<double>> spectrum(const PeriodicGrid& g) {
    std::vector<std::complex<double>> a(g.values.begin(), g.values.end());
    fft(a, false);
    for (auto& z : a) z /= static_cast<double>(g.n);
    return a;
}

PeriodicGrid from_spectrum(std::vector<std::complex<double>> a) {
    const int n = static_cast<int>(a.size());
    for (auto& z : a) z *= static_cast<double>(n);
    fft(a, true);
    PeriodicGrid g;
    g.n = n;
    g.values.resize(n);
    for (int i = 0; i < n; ++i) g.values[i] = a[i].real();
    return g;
}

}  // namespace

PeriodicGrid::PeriodicGrid(int n_, std::vector<double> v) : n(n_), values(std::move(v)) {
    if (!is_power_of_two(n) || n < 16)
        throw DomainError("periodic grid size must be a power of two, n >= 16");
    if (values.size() != static_cast<std::size_t>(n))
        throw DomainError("periodic grid needs exactly n samples");
}

PeriodicGrid PeriodicGrid::sample(const Fn& f, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = f(kTwoPi * i / n);
    return PeriodicGrid(n, std::move(v));
}

double PeriodicGrid::theta(int i) const { return kTwoPi * i / n; }

CircleMap make_circle_map(const std::string& spec) {
    if (spec == "identity") {
        return {"identity", [](double t) { return t; }, [](double) { return 1.0; },
                [](double) { return 0.0; }, [](double) { return 0.0; }};
    }
    if (spec.rfind("warp:", 0) == 0) {
        auto comma = spec.find(',', 5);
        if (comma == std::string::npos) throw DomainError("warp spec is warp:<c>,<m>");
        double c = std::stod(spec.substr(5, comma - 5));
        int m = std::stoi(spec.substr(comma + 1));
        if (m < 1 || std::abs(c * m) >= 1.0)
            throw DomainError("warp needs m >= 1 and |c*m| < 1");
        return {spec,
                [c, m](double t) { return t + c * std::sin(m * t); },
                [c, m](double t) { return 1.0 + c * m * std::cos(m * t); },
                [c, m](double t) { return -c * m * m * std::sin(m * t); },
                [c, m](double t) { return -c * m * m * m * std::cos(m * t); }};
    }
    throw DomainError("unknown circle map spec: " + spec);
}

double circle_inverse(const CircleMap& psi, double x) {
    double lo = x - kTwoPi, hi = x + kTwoPi;
    if (psi.f(lo) > x || psi.f(hi) < x) throw NonInvertible();
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (psi.f(mid) < x)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double gb_coeff(int n, double beta) {
    if (n < 1) throw DomainError("gb_coeff needs n >= 1");
    if (!(beta > 0.0 && beta < std::numbers::pi)) throw DomainError("beta must lie in (0, pi)");
    if (n == 1) return (beta - 0.5 * std::sin(2.0 * beta)) / kTwoPi;
    double nn = n;
    return (std::sin((nn - 1.0) * beta) / (nn * (nn - 1.0)) -
            std::sin((nn + 1.0) * beta) / (nn * (nn + 1.0))) /
           kTwoPi;
}

double gb_mean(double beta) {
    return (std::sin(beta) - beta * std::cos(beta)) / std::numbers::pi;
}

DeconvResult deconvolve(const PeriodicGrid& f, double beta, int M) {
    if (M < 1 || M > f.n / 2) throw DomainError("mode cap must satisfy 1 <= M <= n/2");
    auto spec = spectrum(f);
    std::vector<std::complex<double>> rho_spec(f.n, 0.0);

    double g0 = gb_mean(beta);
    if (std::abs(g0) < 1e-14) throw ZeroDivisor("kernel mean vanishes");
    rho_spec[0] = spec[0] / g0;
    double power = std::norm(rho_spec[0]);
    for (int k = 1; k <= M; ++k) {
        double gk = gb_coeff(k, beta);
        if (std::abs(gk) < 1e-14)
            throw ZeroDivisor("kernel coefficient " + std::to_string(k) + " vanishes");
        rho_spec[k] = spec[k] / gk;
        rho_spec[f.n - k] = spec[f.n - k] / gk;
        power += std::norm(rho_spec[k]) + std::norm(rho_spec[f.n - k]);
    }

    DeconvResult out;
    out.rho = from_spectrum(std::move(rho_spec));
    out.l2_norm = std::sqrt(kTwoPi * power);
    out.l1_bound = std::sqrt(kTwoPi) * out.l2_norm;
    return out;
}

PeriodicGrid convolve(const PeriodicGrid& g, const PeriodicGrid& rho) {
    if (g.n != rho.n) throw DomainError("convolution grids must match");
    auto a = spectrum(g);
    auto b = spectrum(rho);
    for (int i = 0; i < g.n; ++i) a[i] *= b[i];
    return from_spectrum(std::move(a));
}

double local_bound(const PeriodicGrid& u, const CircleMap& psi, double beta, double C1,
                   double C2, int mode_cap) {
    if (!(beta > 0.0 && beta < std::numbers::pi)) throw DomainError("beta must lie in (0, pi)");
    if (mode_cap < 1 || mode_cap > u.n / 2)
        throw DomainError("mode cap must satisfy 1 <= M <= n/2");
    // Transported function w = u o psi^{-1} on the grid, with u evaluated
    // through its mode-capped series (grid interpolation would leak energy
    // into the k^3-weighted modes).
    auto uspec = spectrum(u);
    auto eval_u = [&](double y) {
        double acc = uspec[0].real();
        for (int k = 1; k <= mode_cap; ++k) {
            double A = 2.0 * uspec[k].real();
            double B = -2.0 * uspec[k].imag();
            acc += A * std::cos(k * y) + B * std::sin(k * y);
        }
        return acc;
    };
    PeriodicGrid w;
    w.n = u.n;
    w.values.resize(u.n);
    double sup = 0.0;
    for (int i = 0; i < u.n; ++i) {
        double y = circle_inverse(psi, w.theta(i));
        if (psi.d1(y) <= 1e-12) throw NonInvertible();
        double val = eval_u(y);
        w.values[i] = val;
        sup = std::max(sup, std::abs(val));
    }
    auto spec = spectrum(w);
    double power = 0.0;
    for (int k = 1; k <= mode_cap; ++k) {
        double k6 = std::pow(static_cast<double>(k), 6);
        power += k6 * (std::norm(spec[k]) + std::norm(spec[u.n - k]));
    }
    double third_l2 = std::sqrt(kTwoPi * power);
    return C1 * third_l2 + C2 * sup;
}

double rho_A(double r) {
    double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r3 * r3, r7 = r6 * r;
    return (67.0 * r6 + 67.0 * r5 + 67.0 * r4 + 67.0 * r3 + 172.0 * r2 - 80.0 * r + 60.0) /
           (420.0 * r7);
}

double rho_B(double r) {
    double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r3 * r3, r8 = r4 * r4;
    return -(17.0 * r6 + 34.0 * r5 + 51.0 * r4 + 68.0 * r3 + 295.0 * r2 - 150.0 * r + 105.0) /
           (140.0 * r8);
}

double rho_C(double r) {
    double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r8 = r4 * r4;
    return 3.0 * (r5 + 3.0 * r4 + 6.0 * r3 + 10.0 * r2 + 15.0 * r + 21.0) / (56.0 * r8);
}

GlobalBound global_bound_functional(const CircleMap& psi1, const CircleMap& psi2, int grid) {
    if (grid < 16) throw DomainError("global bound grid too small");
    GlobalBound out;
    double acc = 0.0;
    for (int j = 0; j < grid; ++j) {
        double x = kTwoPi * j / grid;
        double y = circle_inverse(psi2, x);
        double s1 = psi1.d1(y), s2 = psi2.d1(y);
        if (s2 <= 1e-12) throw NonInvertible();
        double rho = s1 / s2;
        if (rho <= 1e-12) throw NonPositiveRho();
        double a = psi1.d2(y) * s2 - s1 * psi2.d2(y);
        double ap = psi1.d3(y) * s2 - s1 * psi2.d3(y);
        double s2_2 = s2 * s2, s2_3 = s2_2 * s2, s2_4 = s2_2 * s2_2, s2_5 = s2_4 * s2;
        double drho = a / s2_3;
        double d2rho = ap / s2_4 - 3.0 * a * psi2.d2(y) / s2_5;
        acc += rho_A(rho) * d2rho * d2rho + rho_B(rho) * drho * drho * d2rho +
               rho_C(rho) * drho * drho * drho * drho;
    }
    out.J = acc * kTwoPi / grid;
    double sup = 0.0;
    for (int j = 0; j < grid; ++j) {
        double t = kTwoPi * j / grid;
        sup = std::max(sup, std::abs(psi1.f(t) - psi2.f(t)));
    }
    out.sup_term = sup;
    return out;
}

}  // namespace flowdepth
