#include "flowdepth/registry.hpp"

#include <cmath>
#include <numbers>

namespace flowdepth {

namespace {

constexpr double kPi = std::numbers::pi;

SmoothMap identity_map() {
    return {"identity", [](double x) { return x; }, [](double) { return 1.0; },
            [](double) { return 0.0; }, [](double) { return 0.0; }};
}

SmoothMap exp_map() {
    const double den = std::exp(1.0) - 1.0;
    return {"exp_map",
            [den](double x) { return (std::exp(x) - 1.0) / den; },
            [den](double x) { return std::exp(x) / den; },
            [den](double x) { return std::exp(x) / den; },
            [den](double x) { return std::exp(x) / den; }};
}

SmoothMap eps_quad(double eps) {
    if (eps <= 0.0) throw DomainError("eps_quad needs eps > 0");
    const double den = 1.0 + eps;
    return {"eps_quad:" + std::to_string(eps),
            [eps, den](double x) { return (eps * x + x * x) / den; },
            [eps, den](double x) { return (eps + 2.0 * x) / den; },
            [den](double) { return 2.0 / den; },
            [](double) { return 0.0; }};
}

SmoothMap osc(int n) {
    if (n < 1) throw DomainError("osc needs n >= 1");
    const double w = n * kPi;
    return {"osc:" + std::to_string(n),
            [w](double x) { return x + std::sin(w * x) / (2.0 * w); },
            [w](double x) { return 1.0 + 0.5 * std::cos(w * x); },
            [w](double x) { return -0.5 * w * std::sin(w * x); },
            [w](double x) { return -0.5 * w * w * std::cos(w * x); }};
}

// sin(k*2pi*x)/(7pi) building block used by the contour generators.
struct Wave {
    double k;  // frequency multiplier (1 or 2)
    double f(double x) const { return std::sin(2.0 * kPi * k * x) / (7.0 * kPi); }
    double d1(double x) const { return (2.0 * k / 7.0) * std::cos(2.0 * kPi * k * x); }
    double d2(double x) const { return -(4.0 * kPi * k * k / 7.0) * std::sin(2.0 * kPi * k * x); }
    double d3(double x) const {
        return -(8.0 * kPi * kPi * k * k * k / 7.0) * std::cos(2.0 * kPi * k * x);
    }
};

SmoothMap wave_combo(const std::string& name, double c1, double c2) {
    Wave w1{1.0}, w2{2.0};
    return {name,
            [=](double x) { return x + c1 * w1.f(x) + c2 * w2.f(x); },
            [=](double x) { return 1.0 + c1 * w1.d1(x) + c2 * w2.d1(x); },
            [=](double x) { return c1 * w1.d2(x) + c2 * w2.d2(x); },
            [=](double x) { return c1 * w1.d3(x) + c2 * w2.d3(x); }};
}

}  // namespace

SmoothMap make_map(const std::string& spec) {
    std::string name = spec;
    std::string arg;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        arg = spec.substr(pos + 1);
    }
    if (name == "identity") return identity_map();
    if (name == "exp_map") return exp_map();
    if (name == "eps_quad") return eps_quad(arg.empty() ? 1.0 : std::stod(arg));
    if (name == "osc") return osc(arg.empty() ? 2 : std::stoi(arg));
    if (name == "fig1") return wave_combo("fig1", 1.0, 0.0);
    if (name == "fig2") return wave_combo("fig2", 0.0, 1.0);
    if (name == "fig3") return wave_combo("fig3", -1.0, -1.0);
    throw DomainError("unknown map spec: " + spec);
}

std::vector<std::string> registry_names() {
    return {"identity", "exp_map", "eps_quad:1", "eps_quad:0.25", "osc:2", "osc:5",
            "fig1", "fig2", "fig3"};
}

MonotonePwl to_pwl(const SmoothMap& m, int n) {
    return MonotonePwl::from_samples(m.f, n);
}

SmoothMap barycentric_map(double a, double b, double c) {
    if (a < -1e-12 || b < -1e-12 || c < -1e-12 || std::abs(a + b + c - 1.0) > 1e-9)
        throw DomainError("barycentric weights must be nonnegative and sum to 1");
    // a*fig1 + b*fig2 + c*fig3 = x + (a-c)*wave1 + (b-c)*wave2
    return wave_combo("bary", a - c, b - c);
}

}  // namespace flowdepth
