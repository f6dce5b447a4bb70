#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlc {

// Finite integer-supported probability mass function. The support starts at
// `offset`; probs[i] is the mass at offset + i. `tail_mass_bound` records the
// mass discarded when an infinite-support family was truncated (0 for exact
// finite families). Interior zeros are allowed in the raw carrier; the
// log-concavity predicates reject them.
struct Pmf {
    std::int64_t offset = 0;
    std::vector<double> probs;
    double tail_mass_bound = 0.0;

    std::size_t size() const { return probs.size(); }
    std::int64_t first_site() const { return offset; }
    std::int64_t last_site() const { return offset + static_cast<std::int64_t>(probs.size()) - 1; }

    double at(std::int64_t k) const {
        if (k < offset || k > last_site()) return 0.0;
        return probs[static_cast<std::size_t>(k - offset)];
    }
};

enum class Family {
    explicit_pmf,
    discrete_uniform,
    bernoulli,
    binomial,
    poisson,
    geometric_one_sided,
    geometric_two_sided,
    poisson_binomial,
};

struct DistributionSpec {
    Family family = Family::explicit_pmf;
    std::int64_t n = 0;            // discrete_uniform (number of points), binomial
    double p = 0.0;                // bernoulli, binomial, geometrics
    double lambda = 0.0;           // poisson
    std::vector<double> p_list;    // poisson_binomial
    std::int64_t offset = 0;       // explicit
    std::vector<double> probs;     // explicit
};

inline constexpr std::int64_t kSupportCap = 10'000'000;

namespace detail {

inline double kahan_sum(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

// Strip leading/trailing zeros and renormalize to total mass 1.
inline Pmf finalize(std::int64_t offset, std::vector<double> probs, double tail_bound) {
    std::size_t lo = 0;
    while (lo < probs.size() && probs[lo] == 0.0) ++lo;
    std::size_t hi = probs.size();
    while (hi > lo && probs[hi - 1] == 0.0) --hi;
    if (lo >= hi) throw std::invalid_argument("pmf has no positive mass");
    std::vector<double> trimmed(probs.begin() + lo, probs.begin() + hi);
    for (double x : trimmed)
        if (!(x >= 0.0)) throw std::invalid_argument("negative or NaN probability");
    double total = kahan_sum(trimmed);
    if (!(total > 0.0)) throw std::invalid_argument("pmf has zero total mass");
    for (double& x : trimmed) x /= total;
    Pmf out;
    out.offset = offset + static_cast<std::int64_t>(lo);
    out.probs = std::move(trimmed);
    out.tail_mass_bound = tail_bound;
    return out;
}

inline void check_support_cap(std::int64_t n) {
    if (n > kSupportCap) throw std::length_error("support cap exceeded");
}

}  // namespace detail

inline Pmf make_pmf(std::int64_t offset, std::vector<double> probs, double tail_bound = 0.0) {
    return detail::finalize(offset, std::move(probs), tail_bound);
}

inline Pmf point_mass(std::int64_t k) { return make_pmf(k, {1.0}); }

inline Pmf discrete_uniform_pmf(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("uniform needs n >= 1");
    detail::check_support_cap(n);
    return make_pmf(0, std::vector<double>(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n)));
}

inline Pmf bernoulli_pmf(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli p out of [0,1]");
    return make_pmf(0, {1.0 - p, p});
}

inline Pmf binomial_pmf(std::int64_t n, double p) {
    if (n < 0) throw std::invalid_argument("binomial n < 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial p out of [0,1]");
    detail::check_support_cap(n + 1);
    std::vector<double> f(static_cast<std::size_t>(n) + 1);
    // log-space to stay finite for large n
    double lp = std::log(p), lq = std::log1p(-p);
    for (std::int64_t k = 0; k <= n; ++k) {
        double lc = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                    std::lgamma(static_cast<double>(n - k) + 1);
        double lv = lc;
        lv += (k > 0) ? static_cast<double>(k) * lp : 0.0;
        lv += (k < n) ? static_cast<double>(n - k) * lq : 0.0;
        f[static_cast<std::size_t>(k)] = (p == 0.0 && k > 0) || (p == 1.0 && k < n) ? 0.0 : std::exp(lv);
    }
    return make_pmf(0, std::move(f));
}

inline Pmf poisson_pmf(double lambda, double tail_eps) {
    if (!(lambda > 0.0)) throw std::invalid_argument("poisson lambda <= 0");
    std::int64_t mode = static_cast<std::int64_t>(std::floor(lambda));
    auto log_pmf = [lambda](std::int64_t k) {
        return -lambda + static_cast<double>(k) * std::log(lambda) - std::lgamma(static_cast<double>(k) + 1);
    };
    // Expand a two-sided window around the mode until the geometric tail
    // estimates on both sides drop below tail_eps/2.
    std::int64_t lo = mode, hi = mode;
    auto right_tail = [&](std::int64_t k) {
        double r = lambda / static_cast<double>(k + 2);
        if (r >= 1.0) return std::exp(log_pmf(k + 1));  // not yet in decaying region
        return std::exp(log_pmf(k + 1)) / (1.0 - r);
    };
    auto left_tail = [&](std::int64_t k) {
        if (k == 0) return 0.0;
        double r = static_cast<double>(k - 1) / lambda;
        if (r >= 1.0) return std::exp(log_pmf(k - 1));
        return std::exp(log_pmf(k - 1)) / (1.0 - r);
    };
    while (right_tail(hi) > tail_eps / 2 || lambda / static_cast<double>(hi + 1) >= 1.0) {
        ++hi;
        detail::check_support_cap(hi - lo + 1);
    }
    while (lo > 0 && left_tail(lo) > tail_eps / 2) --lo;
    std::vector<double> f(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t k = lo; k <= hi; ++k) f[static_cast<std::size_t>(k - lo)] = std::exp(log_pmf(k));
    double retained = detail::kahan_sum(f);
    return detail::finalize(lo, std::move(f), std::max(0.0, 1.0 - retained));
}

inline Pmf geometric_one_sided_pmf(double p, double tail_eps) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("geometric p out of (0,1)");
    // tail beyond K is p^{K+1}
    std::int64_t K = static_cast<std::int64_t>(std::ceil(std::log(tail_eps) / std::log(p))) + 1;
    K = std::max<std::int64_t>(K, 1);
    detail::check_support_cap(K + 1);
    std::vector<double> f(static_cast<std::size_t>(K) + 1);
    for (std::int64_t k = 0; k <= K; ++k) f[static_cast<std::size_t>(k)] = (1.0 - p) * std::pow(p, static_cast<double>(k));
    double retained = detail::kahan_sum(f);
    return detail::finalize(0, std::move(f), std::max(0.0, 1.0 - retained));
}

inline Pmf geometric_two_sided_pmf(double p, double tail_eps) {
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("two-sided geometric p out of [0,1)");
    if (p == 0.0) return point_mass(0);
    double C = (1.0 - p) / (1.0 + p);
    // two tails, each C p^{K+1}/(1-p)
    std::int64_t K = 1;
    while (2.0 * C * std::pow(p, static_cast<double>(K + 1)) / (1.0 - p) > tail_eps) {
        ++K;
        detail::check_support_cap(2 * K + 1);
    }
    std::vector<double> f(static_cast<std::size_t>(2 * K + 1));
    for (std::int64_t k = -K; k <= K; ++k)
        f[static_cast<std::size_t>(k + K)] = C * std::pow(p, static_cast<double>(std::llabs(k)));
    double retained = detail::kahan_sum(f);
    return detail::finalize(-K, std::move(f), std::max(0.0, 1.0 - retained));
}

// Raw sequence convolution (polynomial coefficient product); no normalization.
inline std::vector<double> convolve_seq(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Pmf convolve(const Pmf& a, const Pmf& b) {
    detail::check_support_cap(static_cast<std::int64_t>(a.size() + b.size()) - 1);
    Pmf out;
    out.offset = a.offset + b.offset;
    out.probs = convolve_seq(a.probs, b.probs);
    out.tail_mass_bound = a.tail_mass_bound + b.tail_mass_bound;
    return out;
}

inline Pmf reverse(const Pmf& f) {
    Pmf out;
    out.offset = -f.last_site();
    out.probs.assign(f.probs.rbegin(), f.probs.rend());
    out.tail_mass_bound = f.tail_mass_bound;
    return out;
}

inline Pmf poisson_binomial_pmf(const std::vector<double>& p_list) {
    if (p_list.empty()) throw std::invalid_argument("poisson_binomial needs a non-empty p_list");
    std::vector<double> f{1.0};
    for (double p : p_list) {
        if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("poisson_binomial p out of [0,1]");
        f = convolve_seq(f, {1.0 - p, p});
    }
    return make_pmf(0, std::move(f));
}

inline Pmf build(const DistributionSpec& spec, double tail_eps = 1e-12) {
    if (!(tail_eps > 0.0 && tail_eps <= 1e-6)) throw std::invalid_argument("tail_eps out of (0, 1e-6]");
    switch (spec.family) {
        case Family::explicit_pmf: return make_pmf(spec.offset, spec.probs);
        case Family::discrete_uniform: return discrete_uniform_pmf(spec.n);
        case Family::bernoulli: return bernoulli_pmf(spec.p);
        case Family::binomial: return binomial_pmf(spec.n, spec.p);
        case Family::poisson: return poisson_pmf(spec.lambda, tail_eps);
        case Family::geometric_one_sided: return geometric_one_sided_pmf(spec.p, tail_eps);
        case Family::geometric_two_sided: return geometric_two_sided_pmf(spec.p, tail_eps);
        case Family::poisson_binomial: return poisson_binomial_pmf(spec.p_list);
    }
    throw std::invalid_argument("unknown family");
}

inline double mean(const Pmf& f) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < f.probs.size(); ++i) {
        double x = static_cast<double>(f.offset + static_cast<std::int64_t>(i)) * f.probs[i];
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

// Sum (k-m)^2 f(k) for real m.
inline double second_moment_about_real(const Pmf& f, double m) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = 0; i < f.probs.size(); ++i) {
        double d = static_cast<double>(f.offset + static_cast<std::int64_t>(i)) - m;
        double x = d * d * f.probs[i];
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

inline double second_moment_about(const Pmf& f, std::int64_t m) {
    return second_moment_about_real(f, static_cast<double>(m));
}

inline double variance(const Pmf& f) {
    // centered at the mean for numerical stability
    return std::max(0.0, second_moment_about_real(f, mean(f)));
}

inline std::size_t mode_index(const Pmf& f) {
    // leftmost argmax
    return static_cast<std::size_t>(std::max_element(f.probs.begin(), f.probs.end()) - f.probs.begin());
}

inline std::int64_t mode_site(const Pmf& f) {
    return f.offset + static_cast<std::int64_t>(mode_index(f));
}

// A pmf is symmetric when it is invariant under reflection about the center of
// its support span (an integer or half-integer), entrywise within per_entry_tol.
inline bool is_symmetric(const Pmf& f, double per_entry_tol = 1e-12) {
    const auto& p = f.probs;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i] - p[p.size() - 1 - i]) > per_entry_tol) return false;
    return true;
}

// Center of symmetry (mean of support endpoints); meaningful when is_symmetric.
inline double symmetry_center(const Pmf& f) {
    return 0.5 * (static_cast<double>(f.first_site()) + static_cast<double>(f.last_site()));
}

}  // namespace dlc
