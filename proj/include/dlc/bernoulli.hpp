#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dlc/bounds.hpp"
#include "dlc/entropy.hpp"
#include "dlc/golden.hpp"
#include "dlc/pmf.hpp"
#include "dlc/quadrature.hpp"
#include "dlc/report.hpp"

namespace dlc {

inline constexpr double kEsseenPrefactor = (96.0 / 95.0) * (96.0 / 95.0);

struct BernoulliSumSpec {
    std::vector<double> p_list;  // each in (0,1)

    double variance() const {
        double s = 0.0;
        for (double p : p_list) s += p * (1.0 - p);
        return s;
    }
};

inline void validate(const BernoulliSumSpec& spec) {
    if (spec.p_list.empty()) throw std::invalid_argument("empty p_list");
    if (spec.p_list.size() > 100000) throw std::length_error("p_list too long");
    for (double p : spec.p_list)
        if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p out of (0,1)");
    if (!(spec.variance() > 0.0)) throw std::invalid_argument("degenerate spec: zero variance");
}

// Exact pmf of S_n by sequential convolution; log-concave by closure.
inline Pmf poisson_binomial(const BernoulliSumSpec& spec) {
    validate(spec);
    return poisson_binomial_pmf(spec.p_list);
}

// |E e^{itS}| = prod_k sqrt(1 - 4 p_k q_k sin^2(t/2)).
inline double char_function_modulus(const BernoulliSumSpec& spec, double t) {
    double s = std::sin(t / 2.0);
    double s2 = s * s;
    double prod = 1.0;
    for (double p : spec.p_list) prod *= std::sqrt(std::max(0.0, 1.0 - 4.0 * p * (1.0 - p) * s2));
    return prod;
}

// Q(S;lambda) <= (96/95)^2 lambda * integral_{-1/lambda}^{1/lambda} |v(t)| dt.
// The integrand is even, so integrate the right half and double.
inline double esseen_bound(const BernoulliSumSpec& spec, double lambda, double quad_tol = 1e-10) {
    validate(spec);
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    double integral_value =
        2.0 * integrate([&](double t) { return char_function_modulus(spec, t); }, 0.0, 1.0 / lambda,
                        quad_tol / 2.0);
    return kEsseenPrefactor * lambda * integral_value;
}

// sqrt(2 lambda) e^{-2 lambda} sum_k (lambda^k / k!)^2; terms by the
// recurrence t_{k+1} = t_k (lambda/(k+1))^2.
inline double bcv_objective(double lambda) {
    if (lambda <= 0.0) return 0.0;
    double sum = 0.0;
    double term = 1.0;
    for (int k = 0; k < 100000; ++k) {
        sum += term;
        double next = term * (lambda / (k + 1)) * (lambda / (k + 1));
        if (next < 1e-18 * sum) break;
        term = next;
    }
    return std::sqrt(2.0 * lambda) * std::exp(-2.0 * lambda) * sum;
}

// The sharp constant c ~ 0.4688 in M(S_n) <= c / sqrt(Var): coarse scan on
// [0.05, 3.0] followed by golden-section refinement.
inline double optimal_constant_c() {
    auto [gx, gv] = grid_maximize(bcv_objective, 0.05, 3.0, 64);
    double step = (3.0 - 0.05) / 64.0;
    auto [bx, bv] = golden_maximize(bcv_objective, std::max(0.05, gx - step), std::min(3.0, gx + step));
    return std::max(gv, bv);
}

// Variance below which 2/sqrt(1+4Var) beats c/sqrt(Var): c^2 / (4(1-c^2)).
inline double crossover_variance() {
    double c = optimal_constant_c();
    return c * c / (4.0 * (1.0 - c * c));
}

// N_alpha(S_n) >= 1 + 2 beta Var(S_n) with 1/alpha + 1/beta = 1, alpha >= 2.
inline BoundReport check_mr_bound(const BernoulliSumSpec& spec, double alpha) {
    validate(spec);
    if (!(alpha >= 2.0) || std::isinf(alpha)) throw std::invalid_argument("mr bound stated for finite alpha >= 2");
    double beta = alpha / (alpha - 1.0);
    Pmf f = poisson_binomial(spec);
    double var = variance(f);
    double n_alpha = entropy_power(f, AlphaOrder::finite(alpha));
    double lhs = 1.0 + 2.0 * beta * var;
    BoundReport r = make_report("sec10-mr", lhs, n_alpha, bound_tol(lhs, n_alpha, 0.0));
    r.context["alpha"] = alpha;
    r.context["beta"] = beta;
    r.context["Var"] = var;
    return r;
}

}  // namespace dlc
