#ifndef FLOWDEPTH_CORE1D_HPP
#define FLOWDEPTH_CORE1D_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "flowdepth/errors.hpp"

namespace flowdepth {

// Slopes at or below this value are treated as non-positive.
inline constexpr double kSlopeFloor = 1e-12;

using Fn = std::function<double(double)>;

/// Piecewise-constant function on [0,1]: value values[i] on [breaks[i], breaks[i+1]).
struct StepFunction {
    std::vector<double> breaks;  // ascending, breaks.front()==0, breaks.back()==1
    std::vector<double> values;  // one per cell, size == breaks.size()-1

    double operator()(double x) const;
};

/// Total variation of a step function: sum of absolute interior jumps.
double tv(const StepFunction& s);

/// Exact difference a-b on the merged breakpoint set.
StepFunction step_difference(const StepFunction& a, const StepFunction& b);

/// TV of a-b computed exactly on merged breakpoints.
double tv_step_difference(const StepFunction& a, const StepFunction& b);

// Strictly increasing piecewise-linear map of [0,1] onto itself with fixed
// endpoints. The computational stand-in for an interval diffeomorphism.
class MonotonePwl {
  public:
    MonotonePwl(std::vector<double> xs, std::vector<double> ys);

    static MonotonePwl identity();
    /// Sample a function at i/n, i=0..n. Endpoint values are pinned to 0 and 1.
    static MonotonePwl from_samples(const Fn& f, int n);

    double operator()(double x) const;
    double inverse(double y) const;

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    std::size_t segment_count() const { return xs_.size() - 1; }

    std::vector<double> slopes() const;
    double min_slope() const;

    /// ln of the slope as a step function; throws NonPositiveSlope below the floor.
    StepFunction log_slope() const;

  private:
    std::vector<double> xs_, ys_;
};

/// Exact composition psi1(psi2(x)); breakpoints are psi2^{-1}(breaks of psi1)
/// merged with the breakpoints of psi2.
MonotonePwl compose(const MonotonePwl& psi1, const MonotonePwl& psi2);

/// Uniform samples of a scalar function at i/n on [0,1].
struct GridFunction {
    int n = 0;
    std::vector<double> values;  // n+1 entries

    GridFunction() = default;
    GridFunction(int n_, std::vector<double> v);
    static GridFunction sample(const Fn& f, int n);

    double x(int i) const { return static_cast<double>(i) / n; }
    double eval(double x) const;  // piecewise-linear interpolation
    /// Secant slopes as a step function on the grid.
    StepFunction derivative() const;
};

/// Sum of |g(x_{i+1}) - g(x_i)| over the sample grid.
double tv_of_samples(const GridFunction& g);

/// TV of a smooth function by dyadic sample refinement: doubles the grid until
/// two successive values differ by less than rtol (Richardson acceptance).
double tv_refined(const Fn& g, double rtol = 1e-6, int n0 = 1 << 10, int nmax = 1 << 20);

// CSV formats: MonotonePwl uses columns "x,y"; GridFunction uses "x,u".
// Header rows are required on input and written on output.
void write_csv(std::ostream& os, const MonotonePwl& psi);
void write_csv(std::ostream& os, const GridFunction& g);
MonotonePwl read_pwl_csv(std::istream& is);
GridFunction read_grid_csv(std::istream& is);
MonotonePwl read_pwl_csv_file(const std::string& path);
GridFunction read_grid_csv_file(const std::string& path);

}  // namespace flowdepth

#endif
