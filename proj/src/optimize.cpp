#include "pcc/optimize.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "pcc/errors.hpp"

namespace pcc {

ScalarMax maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                          double tol, int coarse_points) {
    if (!(lo < hi))
        throw DomainError("maximize_scalar: need lo < hi");
    if (!(tol > 0.0))
        throw DomainError("maximize_scalar: tol must be > 0");
    if (coarse_points < 3)
        throw DomainError("maximize_scalar: coarse_points must be >= 3");

    const double ninf = -std::numeric_limits<double>::infinity();
    const int n = coarse_points;
    const double step = (hi - lo) / (n - 1);
    auto grid_x = [&](int i) { return i == n - 1 ? hi : lo + step * i; };

    int bad = 0;
    int best = -1;
    double best_val = ninf;
    for (int i = 0; i < n; ++i) {
        double v = f(grid_x(i));
        if (!std::isfinite(v)) {
            const bool endpoint = (i == 0 || i == n - 1);
            if (!(endpoint && v == ninf))
                ++bad;
            continue;
        }
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    if (2 * bad > n || best < 0)
        throw NumericalError("maximize_scalar: objective non-finite on most of the grid");

    ScalarMax result{grid_x(best), best_val};
    double a = grid_x(best > 0 ? best - 1 : 0);
    double b = grid_x(best < n - 1 ? best + 1 : n - 1);

    auto eval = [&](double x) {
        double v = f(x);
        if (std::isnan(v))
            v = ninf;
        if (v > result.value)
            result = {x, v};
        return v;
    };

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = eval(d);
        }
    }
    return result;
}

double least_squares_slope(std::span<const XY> points) {
    if (points.size() < 2)
        throw DomainError("least_squares_slope: need at least two points");
    double mx = 0.0, my = 0.0;
    for (const auto& p : points) {
        mx += p.x;
        my += p.y;
    }
    mx /= points.size();
    my /= points.size();
    double sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        sxx += (p.x - mx) * (p.x - mx);
        sxy += (p.x - mx) * (p.y - my);
    }
    if (!(sxx > 0.0))
        throw DomainError("least_squares_slope: all x values are equal");
    return sxy / sxx;
}

}  // namespace pcc
