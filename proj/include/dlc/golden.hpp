#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace dlc {

// Golden-section maximization on [a, b]; returns (argmax, max).
inline std::pair<double, double> golden_maximize(const std::function<double(double)>& f, double a, double b,
                                                 double x_tol = 1e-12, int max_iter = 200) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    double x = 0.5 * (a + b);
    return {x, f(x)};
}

// Coarse grid scan returning the index of the best of n+1 equally spaced points.
inline std::pair<double, double> grid_maximize(const std::function<double(double)>& f, double a, double b, int n) {
    double best_x = a, best = f(a);
    for (int i = 1; i <= n; ++i) {
        double x = a + (b - a) * i / n;
        double v = f(x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    return {best_x, best};
}

}  // namespace dlc
