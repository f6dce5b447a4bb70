#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dlc/logconcave.hpp"
#include "dlc/pmf.hpp"
#include "dlc/report.hpp"

namespace dlc {

// Log-piecewise-linear extension of a log-concave pmf: on each segment
// [k, k+1] the density is exp of the linear interpolation of log f.
struct PiecewiseExpDensity {
    std::int64_t first_knot = 0;
    std::vector<double> log_values;  // log f(k) at knots first_knot + i
    double total_integral = 0.0;

    std::size_t segments() const { return log_values.empty() ? 0 : log_values.size() - 1; }
};

namespace detail {

// I_j(b) = integral_0^1 u^j e^{bu} du, j = 0,1,2. Series for small |b|
// (the closed forms cancel catastrophically there), closed forms otherwise.
inline void segment_moments(double b, double& i0, double& i1, double& i2) {
    if (std::abs(b) <= 0.5) {
        i0 = i1 = i2 = 0.0;
        double term = 1.0;  // b^m / m!
        for (int m = 0; m < 40; ++m) {
            double t0 = term / (m + 1);
            double t1 = term / (m + 2);
            double t2 = term / (m + 3);
            i0 += t0;
            i1 += t1;
            i2 += t2;
            if (std::abs(t0) < 1e-18 * std::abs(i0)) break;
            term *= b / (m + 1);
        }
    } else {
        double eb = std::exp(b);
        i0 = std::expm1(b) / b;
        i1 = (eb * (b - 1.0) + 1.0) / (b * b);
        i2 = (eb * (b * b - 2.0 * b + 2.0) - 2.0) / (b * b * b);
    }
}

}  // namespace detail

inline double evaluate(const PiecewiseExpDensity& d, double x) {
    double lo = static_cast<double>(d.first_knot);
    double hi = lo + static_cast<double>(d.log_values.size() - 1);
    if (x < lo || x > hi) return 0.0;
    if (d.log_values.size() == 1) return x == lo ? std::exp(d.log_values[0]) : 0.0;
    std::size_t k = static_cast<std::size_t>(std::min(x - lo, hi - lo - 1.0));
    double t = x - lo - static_cast<double>(k);
    return std::exp((1.0 - t) * d.log_values[k] + t * d.log_values[k + 1]);
}

// integral of the whole density; per-segment closed form
// (f(k+1) - f(k)) / (log f(k+1) - log f(k)), constant segments contribute f(k).
inline double integral(const PiecewiseExpDensity& d) {
    if (d.log_values.size() <= 1) return 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < d.log_values.size(); ++k) {
        double a = d.log_values[k];
        double b = d.log_values[k + 1] - d.log_values[k];
        double i0, i1, i2;
        detail::segment_moments(b, i0, i1, i2);
        s += std::exp(a) * i0;
    }
    return s;
}

inline PiecewiseExpDensity extend(const Pmf& f) {
    if (!is_log_concave(f)) throw std::invalid_argument("extend requires a log-concave pmf");
    PiecewiseExpDensity d;
    d.first_knot = f.offset;
    d.log_values.reserve(f.probs.size());
    for (double p : f.probs) d.log_values.push_back(std::log(p));
    d.total_integral = integral(d);
    return d;
}

// integral (x - m)^2 f(x) dx via exact per-segment moments.
inline double second_moment_integral(const PiecewiseExpDensity& d, std::int64_t m) {
    if (d.log_values.size() <= 1) return 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k + 1 < d.log_values.size(); ++k) {
        double a = d.log_values[k];
        double b = d.log_values[k + 1] - d.log_values[k];
        double c0 = static_cast<double>(d.first_knot + static_cast<std::int64_t>(k) - m);
        double i0, i1, i2;
        detail::segment_moments(b, i0, i1, i2);
        s += std::exp(a) * (c0 * c0 * i0 + 2.0 * c0 * i1 + i2);
    }
    return s;
}

// Prop-6.1-style check on the normalized extension g = f/B with mode m:
// g(m)^2 * integral (x-m)^2 g(x) dx <= 2.
inline BoundReport continuous_mode_bound_check(const PiecewiseExpDensity& d) {
    if (d.log_values.size() <= 1) throw std::invalid_argument("needs at least two knots");
    double B = integral(d);
    std::size_t mi = 0;
    for (std::size_t i = 1; i < d.log_values.size(); ++i)
        if (d.log_values[i] > d.log_values[mi]) mi = i;
    std::int64_t m = d.first_knot + static_cast<std::int64_t>(mi);
    double gm = std::exp(d.log_values[mi]) / B;
    double sm = second_moment_integral(d, m) / B;
    BoundReport r = make_report("prop6.1-mode", gm * gm * sm, 2.0, 1e-10);
    r.context["mode"] = static_cast<double>(m);
    r.context["normalizer"] = B;
    return r;
}

}  // namespace dlc
