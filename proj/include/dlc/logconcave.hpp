#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "dlc/pmf.hpp"
#include "dlc/report.hpp"

namespace dlc {

inline constexpr double kZeroFloor = 1e-300;  // entries below this count as 0

// Contiguous support plus 2 log a_k >= log a_{k-1} + log a_{k+1} - log_tol at
// every interior index. An interior zero fails immediately.
inline bool is_log_concave_sequence(const std::vector<double>& a, double log_tol = 1e-12) {
    if (a.empty()) return false;
    std::size_t lo = 0, hi = a.size();
    while (lo < hi && a[lo] <= kZeroFloor) ++lo;
    while (hi > lo && a[hi - 1] <= kZeroFloor) --hi;
    if (lo >= hi) return false;
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] <= kZeroFloor) return false;  // interior zero: support not an interval
    for (std::size_t i = lo + 1; i + 1 < hi; ++i)
        if (2.0 * std::log(a[i]) < std::log(a[i - 1]) + std::log(a[i + 1]) - log_tol) return false;
    return true;
}

inline bool is_log_concave(const Pmf& f, double log_tol = 1e-12) {
    return is_log_concave_sequence(f.probs, log_tol);
}

// Expand P(z) = prod (z - r_i) = sum C(n,k) a_k z^k and return {a_k}.
// Newton's inequalities a_k^2 >= a_{k-1} a_{k+1} hold whenever all roots are real.
inline std::vector<double> newton_coefficients(const std::vector<double>& roots) {
    if (roots.size() > 40) throw std::length_error("newton_coefficients: degree > 40");
    std::size_t n = roots.size();
    std::vector<long double> c(n + 1, 0.0L);
    c[0] = 1.0L;  // coefficients in descending-degree order during expansion
    std::size_t deg = 0;
    for (double r : roots) {
        ++deg;
        for (std::size_t k = deg; k > 0; --k) c[k] = c[k - 1] - static_cast<long double>(r) * c[k];
        c[0] = -static_cast<long double>(r) * c[0];
    }
    // c[k] is the coefficient of z^k; divide by C(n,k).
    std::vector<double> a(n + 1);
    long double binom = 1.0L;
    for (std::size_t k = 0; k <= n; ++k) {
        a[k] = static_cast<double>(c[k] / binom);
        binom = binom * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
    }
    return a;
}

// Values sorted non-increasingly together with the bijection rank -> site.
// Ties broken by (|site|, negative site first) so the permutation is stable.
struct RearrangedPmf {
    std::vector<double> values;
    std::vector<std::int64_t> permutation;  // permutation[rank] = original site
    double total = 0.0;
};

inline RearrangedPmf decreasing_rearrangement(const Pmf& f) {
    std::vector<std::size_t> idx(f.probs.size());
    std::iota(idx.begin(), idx.end(), 0);
    auto site = [&](std::size_t i) { return f.offset + static_cast<std::int64_t>(i); };
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        if (f.probs[i] != f.probs[j]) return f.probs[i] > f.probs[j];
        std::int64_t si = site(i), sj = site(j);
        if (std::llabs(si) != std::llabs(sj)) return std::llabs(si) < std::llabs(sj);
        return si < sj;
    });
    RearrangedPmf out;
    out.values.reserve(idx.size());
    out.permutation.reserve(idx.size());
    for (std::size_t i : idx) {
        out.values.push_back(f.probs[i]);
        out.permutation.push_back(site(i));
    }
    out.total = detail::kahan_sum(out.values);
    return out;
}

// f majorizes g: every partial sum of f's decreasing rearrangement dominates
// the corresponding partial sum of g's (shorter sequence padded with zeros).
inline bool majorizes(const Pmf& f, const Pmf& g, double tol = 1e-12) {
    RearrangedPmf rf = decreasing_rearrangement(f);
    RearrangedPmf rg = decreasing_rearrangement(g);
    std::size_t n = std::max(rf.values.size(), rg.values.size());
    double sf = 0.0, sg = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k < rf.values.size()) sf += rf.values[k];
        if (k < rg.values.size()) sg += rg.values[k];
        if (sf < sg - tol) return false;
    }
    return true;
}

struct GeometricMatch {
    double q_star = 0.0;
    double scale = 0.0;  // f(0) of the source
    int iterations = 0;
    double residual = 0.0;
};

// Unique q* with f(0) * sum q^{|k|} = f(0)(1+q)/(1-q) = 1, by monotone
// bisection on [0, 1-1e-12].
inline GeometricMatch match_two_sided_geometric(const Pmf& f, double sym_tol = 1e-12) {
    if (!is_symmetric(f, sym_tol)) throw std::invalid_argument("match requires a symmetric pmf");
    if (!is_log_concave(f)) throw std::invalid_argument("match requires a log-concave pmf");
    double f0 = *std::max_element(f.probs.begin(), f.probs.end());
    GeometricMatch m;
    m.scale = f0;
    if (f0 >= 1.0) {  // point mass
        m.q_star = 0.0;
        m.residual = std::abs(f0 - 1.0);
        return m;
    }
    auto total = [f0](double q) { return f0 * (1.0 + q) / (1.0 - q); };
    double lo = 0.0, hi = 1.0 - 1e-12;
    int it = 0;
    while (hi - lo > 1e-14 && it < 200) {
        double mid = 0.5 * (lo + hi);
        if (total(mid) < 1.0)
            lo = mid;
        else
            hi = mid;
        ++it;
    }
    m.q_star = 0.5 * (lo + hi);
    m.iterations = it;
    m.residual = std::abs(total(m.q_star) - 1.0);
    return m;
}

inline Pmf matched_geometric_pmf(const GeometricMatch& m, double tail_eps = 1e-15) {
    if (m.q_star == 0.0) return point_mass(0);
    double q = m.q_star;
    std::int64_t K = 1;
    while (2.0 * m.scale * std::pow(q, static_cast<double>(K + 1)) / (1.0 - q) > tail_eps) ++K;
    std::vector<double> f(static_cast<std::size_t>(2 * K + 1));
    for (std::int64_t k = -K; k <= K; ++k)
        f[static_cast<std::size_t>(k + K)] = m.scale * std::pow(q, static_cast<double>(std::llabs(k)));
    Pmf out;  // not renormalized: the matched law must keep M = f(0) exactly
    out.offset = -K;
    out.probs = std::move(f);
    out.tail_mass_bound = std::max(0.0, 1.0 - detail::kahan_sum(out.probs));
    return out;
}

// Schur-concavity of the tail functional on symmetric log-concave pairs:
// P{|X| > lambda} <= P{|Y| > lambda} for each lambda in [0, lambda_max] when
// f majorizes g. Tails are read off the decreasing rearrangements, matching
// the unimodal layout of symmetric log-concave laws.
inline std::vector<BoundReport> schur_moment_check(const Pmf& f, const Pmf& g, std::int64_t lambda_max,
                                                  double tol = 1e-12) {
    if (!is_symmetric(f) || !is_symmetric(g))
        throw std::invalid_argument("schur_moment_check requires symmetric pmfs");
    if (!is_log_concave(f) || !is_log_concave(g))
        throw std::invalid_argument("schur_moment_check requires log-concave pmfs");
    if (!majorizes(f, g, tol)) throw std::invalid_argument("schur_moment_check requires f to majorize g");
    RearrangedPmf rf = decreasing_rearrangement(f);
    RearrangedPmf rg = decreasing_rearrangement(g);
    auto tail = [](const RearrangedPmf& r, std::int64_t lambda) {
        double s = 0.0;
        std::size_t cut = std::min(static_cast<std::size_t>(2 * lambda + 1), r.values.size());
        for (std::size_t k = 0; k < cut; ++k) s += r.values[k];
        return std::max(0.0, 1.0 - s);
    };
    std::vector<BoundReport> out;
    for (std::int64_t lambda = 0; lambda <= lambda_max; ++lambda) {
        double lhs = tail(rf, lambda);
        double rhs = tail(rg, lambda);
        BoundReport r = make_report("lemma7.2-tail", lhs, rhs, tol + f.tail_mass_bound + g.tail_mass_bound);
        r.context["lambda"] = static_cast<double>(lambda);
        out.push_back(r);
    }
    return out;
}

}  // namespace dlc
