#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dlc {

namespace detail {

// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
inline constexpr std::array<double, 8> kGLNodes = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
inline constexpr std::array<double, 8> kGLWeights = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

inline double gl16(const std::function<double(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        s += kGLWeights[i] * (f(c - h * kGLNodes[i]) + f(c + h * kGLNodes[i]));
    return s * h;
}

}  // namespace detail

// Composite 16-point Gauss-Legendre with panel doubling until the absolute
// change drops below abs_tol.
inline double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-12,
                        int max_doublings = 20) {
    double prev = detail::gl16(f, a, b);
    int panels = 2;
    for (int d = 0; d < max_doublings; ++d, panels *= 2) {
        double s = 0.0;
        double h = (b - a) / panels;
        for (int i = 0; i < panels; ++i) s += detail::gl16(f, a + i * h, a + (i + 1) * h);
        if (std::abs(s - prev) < abs_tol) return s;
        prev = s;
    }
    return prev;
}

}  // namespace dlc
