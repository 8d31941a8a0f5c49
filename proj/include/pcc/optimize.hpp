#pragma once

#include <functional>
#include <span>

namespace pcc {

struct ScalarMax {
    double x = 0.0;
    double value = 0.0;
};

// Coarse grid scan followed by golden-section refinement inside the bracket
// around the best grid point. Ties on the grid go to the smaller x.
ScalarMax maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                          double tol = 1e-10, int coarse_points = 1024);

struct XY {
    double x = 0.0;
    double y = 0.0;
};

// Ordinary least-squares slope of y against x.
double least_squares_slope(std::span<const XY> points);

}  // namespace pcc
