#pragma once

#include <algorithm>
#include <cmath>

#include "dlc/alpha.hpp"
#include "dlc/pmf.hpp"

namespace dlc {

inline double m_functional(const Pmf& f) {
    return *std::max_element(f.probs.begin(), f.probs.end());
}

// H_alpha(X). Sum f^alpha is computed through the max-entry factorization
// M^alpha * sum (f/M)^alpha in log-space, which stays finite for high orders.
inline double renyi_entropy(const Pmf& f, const AlphaOrder& order) {
    switch (order.kind()) {
        case AlphaOrder::Kind::infinity:
            return -std::log(m_functional(f));
        case AlphaOrder::Kind::shannon: {
            double s = 0.0, c = 0.0;
            for (double p : f.probs) {
                if (p <= 0.0) continue;  // 0 log 0 = 0
                double x = -p * std::log(p);
                double y = x - c;
                double t = s + y;
                c = (t - s) - y;
                s = t;
            }
            return std::max(0.0, s);
        }
        case AlphaOrder::Kind::finite: {
            double alpha = order.value();
            double M = m_functional(f);
            double logM = std::log(M);
            double s = 0.0, c = 0.0;
            for (double p : f.probs) {
                if (p <= 0.0) continue;
                double x = std::exp(alpha * (std::log(p) - logM));
                double y = x - c;
                double t = s + y;
                c = (t - s) - y;
                s = t;
            }
            double log_sum = alpha * logM + std::log(s);
            return std::max(0.0, -log_sum / (alpha - 1.0));
        }
    }
    return 0.0;
}

inline double entropy_power(const Pmf& f, const AlphaOrder& order) {
    return std::exp(2.0 * renyi_entropy(f, order));
}

inline double delta(const Pmf& f, const AlphaOrder& order) {
    return entropy_power(f, order) - 1.0;
}

// Q(X;lambda): the largest mass of any integer window of lambda+1 sites.
// Each window is summed left to right so the result matches a brute-force
// window enumeration bit for bit.
inline double concentration(const Pmf& f, std::int64_t lambda) {
    if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
    const auto& p = f.probs;
    std::size_t w = std::min(static_cast<std::size_t>(lambda) + 1, p.size());
    double best = 0.0;
    for (std::size_t s = 0; s + w <= p.size(); ++s) {
        double sum = 0.0;
        for (std::size_t i = 0; i < w; ++i) sum += p[s + i];
        best = std::max(best, sum);
    }
    return best;
}

// X + U_lambda with U uniform on {0,...,lambda}; satisfies
// Q(X;lambda) = (lambda+1) M(X+U_lambda).
inline Pmf smooth_with_discrete_uniform(const Pmf& f, std::int64_t lambda) {
    if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
    if (lambda == 0) return f;
    return convolve(f, discrete_uniform_pmf(lambda + 1));
}

}  // namespace dlc
