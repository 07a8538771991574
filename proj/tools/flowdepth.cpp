// Command-line surface over the flow-complexity library: distances and
// geodesics for interval maps, minimal-weight ReLU interpolation, geodesic
// realization by exact flows, the planar lift check, rotation-group bounds,
// the circle-normalization bound, contour fields, and the verification suite.
//
// Exit codes: 0 ok, 2 bad usage, 3 domain error, 4 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "flowdepth/circle.hpp"
#include "flowdepth/contour.hpp"
#include "flowdepth/flow.hpp"
#include "flowdepth/l1_interp.hpp"
#include "flowdepth/lift2d.hpp"
#include "flowdepth/relu1d.hpp"
#include "flowdepth/so3.hpp"
#include "flowdepth/verify.hpp"

using json = nlohmann::ordered_json;
namespace fd = flowdepth;

namespace {

int default_grid() {
    if (const char* env = std::getenv("FLOWDEPTH_GRID")) {
        int g = std::atoi(env);
        if (g >= 16) return g;
    }
    return 4096;
}

// Map specs: a registry name ("exp_map", "eps_quad:0.5", ...) or "pwl:<file>"
// for a CSV breakpoint table. Mixed registry/pwl pairs are compared after
// sampling the registry map on the working grid.
struct MapSpec {
    std::string spec;
    bool is_pwl() const { return spec.rfind("pwl:", 0) == 0; }
    fd::MonotonePwl pwl(int grid) const {
        if (is_pwl()) return fd::read_pwl_csv_file(spec.substr(4));
        return fd::to_pwl(fd::make_map(spec), grid);
    }
    fd::SmoothMap smooth() const { return fd::make_map(spec); }
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_dist(const MapSpec& a, const MapSpec& b, int grid) {
    json out;
    out["psi1"] = a.spec;
    out["psi2"] = b.spec;
    try {
        double d, legacy;
        if (!a.is_pwl() && !b.is_pwl()) {
            d = fd::distance(a.smooth(), b.smooth());
            legacy = fd::legacy_upper_bound(a.smooth(), b.smooth());
        } else {
            fd::MonotonePwl pa = a.pwl(grid), pb = b.pwl(grid);
            d = fd::distance(pa, pb);
            fd::StepFunction la = pa.log_slope(), lb = pb.log_slope();
            legacy = d + std::abs(la.values.front() - lb.values.front()) +
                     std::abs(la.values.back() - lb.values.back());
        }
        out["d_F"] = d;
        out["legacy_upper"] = legacy;
        out["grid"] = grid;
    } catch (const fd::NonPositiveSlope&) {
        out["distance"] = "infinite";
        emit(out);
        return 3;
    }
    emit(out);
    return 0;
}

int run_geodesic(const MapSpec& a, const MapSpec& b, double t, int k, int grid,
                 const std::string& point_csv) {
    json out;
    out["psi1"] = a.spec;
    out["psi2"] = b.spec;
    out["t"] = t;
    out["k"] = k;
    out["grid"] = grid;
    std::optional<fd::MonotonePwl> point;
    if (!a.is_pwl() && !b.is_pwl()) {
        fd::SmoothMap ma = a.smooth(), mb = b.smooth();
        out["length"] = fd::geodesic_length(ma, mb, k, grid);
        out["d_F"] = fd::distance(ma, mb);
        if (!point_csv.empty()) point = fd::geodesic_point(ma, mb, t, grid);
    } else {
        fd::MonotonePwl pa = a.pwl(grid), pb = b.pwl(grid);
        out["length"] = fd::geodesic_length(pa, pb, k, grid);
        out["d_F"] = fd::distance(pa, pb);
        if (!point_csv.empty()) point = fd::geodesic_point(pa, pb, t, grid);
    }
    if (point) {
        std::ofstream f(point_csv);
        fd::write_csv(f, *point);
        out["point_csv"] = point_csv;
    }
    emit(out);
    return 0;
}

int run_contour(int g, const std::string& metric, int grid, const std::string& path) {
    fd::ContourMetric m =
        metric == "l2" ? fd::ContourMetric::L2 : fd::ContourMetric::Flow;
    auto rows = fd::contour_field(g, m, grid);
    std::ostringstream csv;
    csv << "a,b,c,value\n";
    csv.precision(17);
    for (const auto& row : rows)
        csv << row.a << ',' << row.b << ',' << row.c << ',' << row.value << '\n';
    if (path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(path);
        f << csv.str();
    }
    return 0;
}

int run_interp(const std::string& input) {
    fd::GridFunction g = fd::read_grid_csv_file(input);
    fd::InterpProblem p{g.n, g.values};
    fd::InterpWitness wit = fd::witness(p);
    double closed = fd::min_weight(p);
    json out;
    out["N"] = p.N;
    out["min_weight"] = closed;
    out["lp_oracle"] = fd::lp_oracle(p);
    out["witness_feasible"] = wit.feasibility_residual(p) < 1e-10;
    emit(out);
    return 0;
}

int run_realize(const std::string& target, double delta, int k, int N, int grid,
                const std::string& traj_csv) {
    fd::RealizeReport rep = fd::realize_geodesic(fd::make_map(target), delta, k, N, grid);
    json out;
    out["target"] = target;
    out["k"] = rep.k;
    out["N"] = rep.N;
    out["total_time"] = rep.total_time;
    out["budget"] = rep.budget;
    out["sup_error"] = rep.sup_error;
    if (!traj_csv.empty()) {
        std::ofstream f(traj_csv);
        f << "t,x0,x_t\n";
        f.precision(17);
        const int probes = 8;
        for (int i = 0; i <= probes; ++i) {
            double x0 = static_cast<double>(i) / probes;
            double x = x0, time = 0.0;
            f << time << ',' << x0 << ',' << x << '\n';
            for (const auto& seg : rep.schedule.segments) {
                x = fd::flow_exact(seg.field, seg.duration, x);
                time += seg.duration;
                f << time << ',' << x0 << ',' << x << '\n';
            }
        }
        out["trajectory_csv"] = traj_csv;
    }
    emit(out);
    return 0;
}

int run_lift(const std::string& fn, double k0, double k1, double lambda, double kappa,
             int grid) {
    fd::LiftConfig cfg = fd::make_lift_config(fn, k0, k1, lambda, kappa);
    fd::LiftReport rep = fd::verify_factorization(cfg, grid);
    json out;
    out["fn"] = fn;
    out["sup_error"] = rep.sup_error;
    out["segment_margin"] = rep.segment_margin;
    emit(out);
    return 0;
}

fd::Rotation3 parse_rotation(const std::string& spec) {
    // "axis=x,y,z;angle=r"
    auto semi = spec.find(';');
    if (spec.rfind("axis=", 0) != 0 || semi == std::string::npos ||
        spec.find("angle=", semi) == std::string::npos)
        throw fd::DomainError("rotation spec is axis=x,y,z;angle=r");
    std::string axis_part = spec.substr(5, semi - 5);
    double angle = std::stod(spec.substr(spec.find("angle=", semi) + 6));
    std::istringstream as(axis_part);
    std::string sx, sy, sz;
    if (!std::getline(as, sx, ',') || !std::getline(as, sy, ',') || !std::getline(as, sz))
        throw fd::DomainError("rotation axis needs three components");
    Eigen::Vector3d axis(std::stod(sx), std::stod(sy), std::stod(sz));
    if (axis.norm() == 0.0) throw fd::DomainError("rotation axis must be nonzero");
    return fd::exp_rot(axis.normalized(), angle);
}

fd::Rotation3 read_matrix_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw fd::DomainError("cannot open " + path);
    fd::Rotation3 R;
    std::string line;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(f, line)) throw fd::DomainError("matrix CSV needs 3 rows");
        std::istringstream row(line);
        std::string cell;
        for (int j = 0; j < 3; ++j) {
            if (!std::getline(row, cell, ',')) throw fd::DomainError("matrix CSV needs 3 columns");
            R(i, j) = std::stod(cell);
        }
    }
    fd::validate_rotation(R);
    return R;
}

int run_so3(const std::string& rotation, const std::string& matrix) {
    fd::Rotation3 R = matrix.empty() ? parse_rotation(rotation) : read_matrix_csv(matrix);
    fd::L1Bounds b = fd::d_l1_bounds(fd::Rotation3::Identity(), R);
    json out;
    out["theta"] = b.lower;
    out["l1_lower"] = b.lower;
    out["l1_log_upper"] = b.log_upper;
    out["l1_euler_upper"] = b.euler_upper;
    emit(out);
    return 0;
}

int run_circle_bound(const std::string& psi1, const std::string& psi2, double beta,
                     int modes, int grid) {
    fd::CircleMap m1 = fd::make_circle_map(psi1);
    fd::CircleMap m2 = fd::make_circle_map(psi2);
    fd::GlobalBound g = fd::global_bound_functional(m1, m2, grid);
    double checksum = 0.0;
    for (int n = 1; n <= modes; ++n) checksum += std::abs(fd::gb_coeff(n, beta));
    json out;
    out["psi1"] = psi1;
    out["psi2"] = psi2;
    out["beta"] = beta;
    out["J"] = g.J;
    out["sup_term"] = g.sup_term;
    out["a_n_checksum"] = checksum;
    emit(out);
    return 0;
}

int run_verify_cmd(std::uint64_t seed, const std::string& filter, const std::string& fault) {
    if (fault == "min-sn-sign") fd::testhooks::flip_min_sn_dist_sign = true;
    else if (!fault.empty()) throw fd::DomainError("unknown fault hook: " + fault);
    auto results = fd::run_verify(seed, filter);
    json out;
    out["seed"] = seed;
    if (!filter.empty()) out["filter"] = filter;
    if (!fault.empty()) out["injected_fault"] = fault;
    json props = json::array();
    for (const auto& r : results) {
        json p;
        p["name"] = r.name;
        p["samples"] = r.samples;
        p["worst_slack"] = r.worst_slack;
        p["pass"] = r.pass;
        if (!r.note.empty()) p["note"] = r.note;
        props.push_back(p);
    }
    out["properties"] = props;
    bool ok = fd::all_pass(results);
    out["all_pass"] = ok;
    emit(out);
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flow-complexity metrics for interval maps, rotations, and circle layers"};
    app.require_subcommand(1);

    int grid = default_grid();
    std::uint64_t seed = 12345;
    app.add_option("--grid", grid, "default evaluation grid (env FLOWDEPTH_GRID)")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized suites")->capture_default_str();

    std::string psi1 = "identity", psi2 = "exp_map";
    auto* dist = app.add_subcommand("dist", "flow metric between two maps");
    dist->add_option("--psi1", psi1, "map spec or pwl:<csv>")->capture_default_str();
    dist->add_option("--psi2", psi2, "map spec or pwl:<csv>")->capture_default_str();

    double geo_t = 0.5;
    int geo_k = 64;
    std::string point_csv;
    auto* geo = app.add_subcommand("geodesic", "path length and intermediate points");
    geo->add_option("--psi1", psi1)->capture_default_str();
    geo->add_option("--psi2", psi2)->capture_default_str();
    geo->add_option("--t", geo_t, "path parameter for --point-csv")->capture_default_str();
    geo->add_option("--k", geo_k, "parameter steps")->capture_default_str();
    geo->add_option("--point-csv", point_csv, "write the path point as CSV");

    int bary = 10;
    std::string metric = "flow", out_path;
    auto* contour = app.add_subcommand("contour", "barycentric distance field as CSV");
    contour->add_option("--bary", bary, "simplex resolution")->capture_default_str();
    contour->add_option("--metric", metric, "flow | l2")
        ->check(CLI::IsMember({"flow", "l2"}))
        ->capture_default_str();
    contour->add_option("--out", out_path, "output file (default stdout)");

    std::string interp_input;
    auto* interp = app.add_subcommand("interp", "minimal-weight ReLU interpolation");
    interp->add_option("--input", interp_input, "grid function CSV (x,u)")->required();

    std::string target = "exp_map", traj_csv;
    double delta = 0.15;
    int rk = 32, rN = 64;
    auto* realize = app.add_subcommand("realize", "drive the identity to a target by flows");
    realize->add_option("--target", target)->capture_default_str();
    realize->add_option("--delta", delta, "time budget slack")->capture_default_str();
    realize->add_option("--k", rk, "path steps")->capture_default_str();
    realize->add_option("--interp-n", rN, "interpolation nodes per step")->capture_default_str();
    realize->add_option("--traj-csv", traj_csv, "write probe trajectories as CSV");

    std::string lift_fn = "quad", lift_domain = "-1,1";
    double lambda = 0.5, kappa = 0.3;
    int lift_grid = 1000;
    auto* lift = app.add_subcommand("lift", "planar lift factorization check");
    lift->add_option("--fn", lift_fn, "zero | quad | sin3")->capture_default_str();
    lift->add_option("--domain", lift_domain, "target interval as k0,k1")->capture_default_str();
    lift->add_option("--lambda", lambda)->capture_default_str();
    lift->add_option("--kappa", kappa)->capture_default_str();
    lift->add_option("--grid", lift_grid, "verification points")->capture_default_str();

    std::string rotation = "axis=0,0,1;angle=1.5707963267948966", matrix;
    auto* so3 = app.add_subcommand("so3", "rotation transport-time bounds");
    so3->add_option("--rotation", rotation, "axis=x,y,z;angle=r")->capture_default_str();
    so3->add_option("--matrix", matrix, "3x3 rotation as CSV");

    std::string cpsi1 = "warp:0.05,1", cpsi2 = "identity";
    double beta = std::numbers::pi * (std::sqrt(5.0) - 1.0) / 2.0;
    int modes = 64;
    auto* circle = app.add_subcommand("circle-bound", "circle-layer upper bound");
    circle->add_option("--psi1", cpsi1)->capture_default_str();
    circle->add_option("--psi2", cpsi2)->capture_default_str();
    circle->add_option("--beta", beta)->capture_default_str();
    circle->add_option("--modes", modes)->capture_default_str();

    std::string filter, fault;
    auto* verify = app.add_subcommand("verify", "run every module's invariant suite");
    verify->add_option("--filter", filter, "keep properties containing this substring");
    verify->add_option("--inject-fault", fault,
                       "test hook; 'min-sn-sign' flips a sign in the closed form");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dist->parsed()) return run_dist({psi1}, {psi2}, grid);
        if (geo->parsed()) return run_geodesic({psi1}, {psi2}, geo_t, geo_k, grid, point_csv);
        if (contour->parsed()) return run_contour(bary, metric, grid, out_path);
        if (interp->parsed()) return run_interp(interp_input);
        if (realize->parsed()) return run_realize(target, delta, rk, rN, grid, traj_csv);
        if (lift->parsed()) {
            auto comma = lift_domain.find(',');
            if (comma == std::string::npos)
                throw fd::DomainError("lift domain must be k0,k1");
            double k0 = std::stod(lift_domain.substr(0, comma));
            double k1 = std::stod(lift_domain.substr(comma + 1));
            return run_lift(lift_fn, k0, k1, lambda, kappa, lift_grid);
        }
        if (so3->parsed()) return run_so3(rotation, matrix);
        if (circle->parsed()) return run_circle_bound(cpsi1, cpsi2, beta, modes, grid);
        if (verify->parsed()) return run_verify_cmd(seed, filter, fault);
    } catch (const fd::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
