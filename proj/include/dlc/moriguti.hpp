#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dlc/quadrature.hpp"
#include "dlc/report.hpp"

namespace dlc {

inline constexpr double kTwoPiE = 17.07946844534713;  // 2*pi*e

// Constants of the variance-constrained Renyi maximizer: the density on
// (-1,1) proportional to (1-x^2)^{1/(alpha-1)}, its normalizer c_alpha,
// extremal variance, and the sharp ratio A_alpha = N_alpha / Var.
struct MorigutiConstants {
    double alpha = 0.0;
    double c_alpha = 0.0;
    double beta = 0.0;    // (2*alpha - 1) / alpha
    double c_beta = 0.0;
    double var_extremal = 0.0;  // (alpha - 1) / (3*alpha - 1)
    double a_alpha = 0.0;
};

namespace detail {

// log of 1/B(a/(a-1), 1/2); everything in log-gamma to survive alpha near 1.
inline double log_c(double a) {
    return std::lgamma((3.0 * a - 1.0) / (2.0 * (a - 1.0))) - std::lgamma(a / (a - 1.0)) -
           std::lgamma(0.5);
}

}  // namespace detail

inline MorigutiConstants compute_constants(double alpha) {
    if (!(alpha > 1.0 + 1e-6 && alpha <= 1e6)) throw std::invalid_argument("alpha out of (1+1e-6, 1e6]");
    MorigutiConstants m;
    m.alpha = alpha;
    m.beta = (2.0 * alpha - 1.0) / alpha;
    double lca = detail::log_c(alpha);
    double lcb = detail::log_c(m.beta);
    m.c_alpha = std::exp(lca);
    m.c_beta = std::exp(lcb);
    m.var_extremal = (alpha - 1.0) / (3.0 * alpha - 1.0);
    double log_a = std::log((3.0 * alpha - 1.0) / (alpha - 1.0)) + 2.0 / (alpha - 1.0) * (lcb - alpha * lca);
    m.a_alpha = std::exp(log_a);
    return m;
}

inline double extremal_density_value(double alpha, double x) {
    if (!(alpha > 1.0)) throw std::invalid_argument("alpha must exceed 1");
    if (std::abs(x) >= 1.0) return 0.0;
    MorigutiConstants m = compute_constants(alpha);
    return m.c_alpha * std::pow(1.0 - x * x, 1.0 / (alpha - 1.0));
}

// Quadrature self-checks. The substitution x = sin(theta) turns every
// (1-x^2)^g factor into a smooth cosine power, so the endpoint cusps vanish.
inline double quad_extremal_mass(double alpha, double abs_tol = 1e-12) {
    MorigutiConstants m = compute_constants(alpha);
    double g = 1.0 / (alpha - 1.0);
    const double half_pi = std::asin(1.0);
    return integrate(
        [&](double th) { return m.c_alpha * std::pow(std::cos(th), 2.0 * g + 1.0); }, -half_pi, half_pi,
        abs_tol);
}

inline double quad_extremal_second_moment(double alpha, double abs_tol = 1e-12) {
    MorigutiConstants m = compute_constants(alpha);
    double g = 1.0 / (alpha - 1.0);
    const double half_pi = std::asin(1.0);
    return integrate(
        [&](double th) {
            double s = std::sin(th);
            return m.c_alpha * s * s * std::pow(std::cos(th), 2.0 * g + 1.0);
        },
        -half_pi, half_pi, abs_tol);
}

// N_alpha of the extremal density by direct quadrature of integral f^alpha.
inline double quad_extremal_entropy_power(double alpha, double abs_tol = 1e-13) {
    MorigutiConstants m = compute_constants(alpha);
    double g = alpha / (alpha - 1.0);
    const double half_pi = std::asin(1.0);
    double int_f_alpha = integrate(
        [&](double th) {
            return std::pow(m.c_alpha, alpha) * std::pow(std::cos(th), 2.0 * g + 1.0);
        },
        -half_pi, half_pi, abs_tol);
    return std::pow(int_f_alpha, -2.0 / (alpha - 1.0));
}

inline std::vector<BoundReport> a_alpha_limits_check() {
    std::vector<BoundReport> out;
    {
        double a = compute_constants(1.0 + 1e-4).a_alpha;
        BoundReport r = make_report("a_alpha-limit-1", std::abs(a - kTwoPiE), 0.02, 0.0);
        r.context["alpha"] = 1.0 + 1e-4;
        r.context["a_alpha"] = a;
        out.push_back(r);
    }
    {
        double a = compute_constants(1e4).a_alpha;
        BoundReport r = make_report("a_alpha-limit-inf", std::abs(a - 12.0), 0.01, 0.0);
        r.context["alpha"] = 1e4;
        r.context["a_alpha"] = a;
        out.push_back(r);
    }
    return out;
}

}  // namespace dlc
