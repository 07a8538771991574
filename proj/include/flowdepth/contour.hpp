#ifndef FLOWDEPTH_CONTOUR_HPP
#define FLOWDEPTH_CONTOUR_HPP

#include <vector>

#include "flowdepth/registry.hpp"

namespace flowdepth {

enum class ContourMetric { Flow, L2 };

struct BaryRow {
    double a, b, c;
    double value;
};

/// Distance field over the barycentric simplex spanned by the three wave
/// generators, measured from the center point (which is the identity map).
/// Rows are ordered lexicographically in (i, j) for determinism; points
/// evaluate independently (OpenMP), with a serial reference twin.
std::vector<BaryRow> contour_field(int g, ContourMetric metric, int grid = 4096);
std::vector<BaryRow> contour_field_serial(int g, ContourMetric metric, int grid = 4096);

/// L2([0,1]) distance of the combination map to the identity.
double l2_to_identity(const SmoothMap& m, int grid);

/// Spearman rank correlation between two equally ordered value lists.
double rank_correlation(const std::vector<double>& u, const std::vector<double>& v);

}  // namespace flowdepth

#endif
