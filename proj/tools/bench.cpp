// Timing comparison between the OpenMP kernels and their serial reference
// twins: flow maps, geodesic lengths, lift verification, contour fields.

#include <chrono>
#include <cstdio>
#include <random>

#include "flowdepth/contour.hpp"
#include "flowdepth/flow.hpp"
#include "flowdepth/lift2d.hpp"
#include "flowdepth/relu1d.hpp"

namespace fd = flowdepth;

namespace {

template <typename F>
double time_ms(F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-24s serial %9.2f ms   omp %9.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    std::mt19937_64 rng(2024);

    fd::ControlSchedule sched;
    for (int i = 0; i < 8; ++i)
        sched.segments.push_back({fd::random_family_field(rng, 5, 1.0), 0.25});
    const int flow_n = 200000;
    double fs = time_ms([&] { fd::flow_map_serial(sched, flow_n); });
    double fp = time_ms([&] { fd::flow_map(sched, flow_n); });
    report("flow_map", fs, fp);

    fd::SmoothMap id = fd::make_map("identity");
    fd::SmoothMap target = fd::make_map("fig1");
    double gs = time_ms([&] { fd::geodesic_length_serial(id, target, 256, 8192); });
    double gp = time_ms([&] { fd::geodesic_length(id, target, 256, 8192); });
    report("geodesic_length", gs, gp);

    fd::LiftConfig cfg = fd::make_lift_config("sin3", -1.0, 1.0, 0.5, 0.2);
    double ls = time_ms([&] { fd::verify_factorization_serial(cfg, 20000); });
    double lp = time_ms([&] { fd::verify_factorization(cfg, 20000); });
    report("lift_factorization", ls, lp);

    double cs = time_ms([&] { fd::contour_field_serial(24, fd::ContourMetric::Flow, 2048); });
    double cp = time_ms([&] { fd::contour_field(24, fd::ContourMetric::Flow, 2048); });
    report("contour_field", cs, cp);

    return 0;
}
