#include "flowdepth/core1d.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace flowdepth {

namespace {

// Breakpoints closer than this are treated as the same point when merging.
constexpr double kMergeTol = 1e-13;

std::vector<double> merge_breaks(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    std::vector<double> out;
    out.reserve(m.size());
    for (double x : m) {
        if (out.empty() || x - out.back() > kMergeTol) out.push_back(x);
    }
    out.front() = 0.0;
    out.back() = 1.0;
    return out;
}

// Index of the cell containing x in an ascending breakpoint list.
std::size_t cell_of(const std::vector<double>& breaks, double x) {
    auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
    std::size_t i = static_cast<std::size_t>(it - breaks.begin());
    if (i == 0) return 0;
    if (i >= breaks.size()) return breaks.size() - 2;
    return i - 1;
}

}  // namespace

double StepFunction::operator()(double x) const {
    return values[cell_of(breaks, x)];
}

double tv(const StepFunction& s) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i)
        total += std::abs(s.values[i + 1] - s.values[i]);
    return total;
}

StepFunction step_difference(const StepFunction& a, const StepFunction& b) {
    StepFunction d;
    d.breaks = merge_breaks(a.breaks, b.breaks);
    d.values.reserve(d.breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < d.breaks.size(); ++i) {
        double mid = 0.5 * (d.breaks[i] + d.breaks[i + 1]);
        d.values.push_back(a(mid) - b(mid));
    }
    return d;
}

double tv_step_difference(const StepFunction& a, const StepFunction& b) {
    return tv(step_difference(a, b));
}

MonotonePwl::MonotonePwl(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() < 2 || xs_.size() != ys_.size())
        throw DomainError("piecewise-linear map needs matching x/y lists with at least 2 points");
    if (xs_.front() != 0.0 || xs_.back() != 1.0)
        throw BoundaryViolation("breakpoints must start at 0 and end at 1");
    if (ys_.front() != 0.0 || ys_.back() != 1.0)
        throw BoundaryViolation("values must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        if (!(xs_[i + 1] > xs_[i]))
            throw DegenerateSegment();
        if (ys_[i + 1] < ys_[i])
            throw NonMonotoneSamples("values must be nondecreasing");
    }
}

MonotonePwl MonotonePwl::identity() {
    return MonotonePwl({0.0, 1.0}, {0.0, 1.0});
}

MonotonePwl MonotonePwl::from_samples(const Fn& f, int n) {
    std::vector<double> xs(n + 1), ys(n + 1);
    for (int i = 0; i <= n; ++i) {
        xs[i] = static_cast<double>(i) / n;
        ys[i] = f(xs[i]);
    }
    xs[0] = 0.0;
    xs[n] = 1.0;
    ys[0] = 0.0;
    ys[n] = 1.0;
    return MonotonePwl(std::move(xs), std::move(ys));
}

double MonotonePwl::operator()(double x) const {
    std::size_t i = cell_of(xs_, x);
    double t = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
    return ys_[i] + t * (ys_[i + 1] - ys_[i]);
}

double MonotonePwl::inverse(double y) const {
    auto it = std::upper_bound(ys_.begin(), ys_.end(), y);
    std::size_t i = static_cast<std::size_t>(it - ys_.begin());
    if (i == 0) return xs_.front();
    if (i >= ys_.size()) i = ys_.size() - 1;
    --i;
    double dy = ys_[i + 1] - ys_[i];
    if (dy <= 0.0) throw NonPositiveSlope("inverse of a flat segment");
    double t = (y - ys_[i]) / dy;
    return xs_[i] + t * (xs_[i + 1] - xs_[i]);
}

std::vector<double> MonotonePwl::slopes() const {
    std::vector<double> s(xs_.size() - 1);
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
        s[i] = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    return s;
}

double MonotonePwl::min_slope() const {
    auto s = slopes();
    return *std::min_element(s.begin(), s.end());
}

StepFunction MonotonePwl::log_slope() const {
    StepFunction out;
    out.breaks = xs_;
    out.values = slopes();
    for (double& s : out.values) {
        if (s <= kSlopeFloor) throw NonPositiveSlope();
        s = std::log(s);
    }
    return out;
}

MonotonePwl compose(const MonotonePwl& psi1, const MonotonePwl& psi2) {
    if (psi1.min_slope() <= kSlopeFloor || psi2.min_slope() <= kSlopeFloor)
        throw NonPositiveSlope("composition requires strictly increasing maps");
    std::vector<double> pulled;
    pulled.reserve(psi1.xs().size());
    for (double bx : psi1.xs()) pulled.push_back(psi2.inverse(bx));
    std::sort(pulled.begin(), pulled.end());
    std::vector<double> breaks = merge_breaks(psi2.xs(), pulled);
    std::vector<double> ys(breaks.size());
    for (std::size_t i = 0; i < breaks.size(); ++i) ys[i] = psi1(psi2(breaks[i]));
    ys.front() = 0.0;
    ys.back() = 1.0;
    return MonotonePwl(std::move(breaks), std::move(ys));
}

GridFunction::GridFunction(int n_, std::vector<double> v) : n(n_), values(std::move(v)) {
    if (n < 2) throw DomainError("grid function needs n >= 2");
    if (values.size() != static_cast<std::size_t>(n + 1))
        throw DomainError("grid function needs n+1 values");
}

GridFunction GridFunction::sample(const Fn& f, int n) {
    std::vector<double> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = f(static_cast<double>(i) / n);
    return GridFunction(n, std::move(v));
}

double GridFunction::eval(double xq) const {
    double pos = xq * n;
    int i = static_cast<int>(std::floor(pos));
    if (i < 0) i = 0;
    if (i >= n) i = n - 1;
    double t = pos - i;
    return values[i] + t * (values[i + 1] - values[i]);
}

StepFunction GridFunction::derivative() const {
    StepFunction d;
    d.breaks.resize(n + 1);
    d.values.resize(n);
    for (int i = 0; i <= n; ++i) d.breaks[i] = static_cast<double>(i) / n;
    d.breaks[0] = 0.0;
    d.breaks[n] = 1.0;
    for (int i = 0; i < n; ++i) d.values[i] = (values[i + 1] - values[i]) * n;
    return d;
}

double tv_of_samples(const GridFunction& g) {
    double total = 0.0;
    for (int i = 0; i < g.n; ++i) total += std::abs(g.values[i + 1] - g.values[i]);
    return total;
}

double tv_refined(const Fn& g, double rtol, int n0, int nmax) {
    double prev = tv_of_samples(GridFunction::sample(g, n0));
    for (int n = 2 * n0; n <= nmax; n *= 2) {
        double cur = tv_of_samples(GridFunction::sample(g, n));
        if (std::abs(cur - prev) < rtol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

namespace {

void write_rows(std::ostream& os, const char* header, const std::vector<double>& a,
                const std::vector<double>& b) {
    os << header << '\n';
    os << std::setprecision(17);
    for (std::size_t i = 0; i < a.size(); ++i) os << a[i] << ',' << b[i] << '\n';
}

std::pair<std::vector<double>, std::vector<double>> read_rows(std::istream& is,
                                                              const char* expect_header) {
    std::string line;
    if (!std::getline(is, line)) throw DomainError("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expect_header)
        throw DomainError("CSV header must be \"" + std::string(expect_header) + "\"");
    std::vector<double> a, b;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string sa, sb;
        if (!std::getline(row, sa, ',') || !std::getline(row, sb))
            throw DomainError("malformed CSV row: " + line);
        a.push_back(std::stod(sa));
        b.push_back(std::stod(sb));
    }
    return {std::move(a), std::move(b)};
}

}  // namespace

void write_csv(std::ostream& os, const MonotonePwl& psi) {
    write_rows(os, "x,y", psi.xs(), psi.ys());
}

void write_csv(std::ostream& os, const GridFunction& g) {
    std::vector<double> xs(g.values.size());
    for (int i = 0; i <= g.n; ++i) xs[i] = g.x(i);
    write_rows(os, "x,u", xs, g.values);
}

MonotonePwl read_pwl_csv(std::istream& is) {
    auto [xs, ys] = read_rows(is, "x,y");
    return MonotonePwl(std::move(xs), std::move(ys));
}

GridFunction read_grid_csv(std::istream& is) {
    auto [xs, us] = read_rows(is, "x,u");
    int n = static_cast<int>(xs.size()) - 1;
    if (n < 2) throw DomainError("grid CSV needs at least 3 rows");
    for (int i = 0; i <= n; ++i) {
        if (std::abs(xs[i] - static_cast<double>(i) / n) > 1e-9)
            throw DomainError("grid CSV must sample uniformly at i/n");
    }
    return GridFunction(n, std::move(us));
}

MonotonePwl read_pwl_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return read_pwl_csv(f);
}

GridFunction read_grid_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return read_grid_csv(f);
}

}  // namespace flowdepth
