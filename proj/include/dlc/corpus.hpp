#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "dlc/pmf.hpp"

namespace dlc {

// Deterministic uniform doubles on top of mt19937_64 so corpus output is
// byte-identical across platforms (std::uniform_real_distribution is not).
class CorpusRng {
public:
    explicit CorpusRng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

// Random strictly positive log-concave pmf: a concave log-sequence built from
// sorted (hence non-increasing) increments.
inline Pmf random_log_concave_pmf(CorpusRng& rng, std::int64_t max_support = 60) {
    std::int64_t len = rng.uniform_int(1, max_support);
    std::vector<double> inc(static_cast<std::size_t>(len - 1));
    for (double& d : inc) d = rng.uniform(-1.5, 1.5);
    std::sort(inc.begin(), inc.end(), std::greater<double>());
    std::vector<double> logv(static_cast<std::size_t>(len), 0.0);
    for (std::size_t i = 1; i < logv.size(); ++i) logv[i] = logv[i - 1] + inc[i - 1];
    std::vector<double> f(logv.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::exp(logv[i]);
    std::int64_t offset = rng.uniform_int(-20, 20);
    return make_pmf(offset, std::move(f));
}

// Random symmetric log-concave pmf centered at 0 (odd support) or at a
// half-integer (even support).
inline Pmf random_symmetric_log_concave_pmf(CorpusRng& rng, std::int64_t max_half = 25) {
    std::int64_t m = rng.uniform_int(0, max_half);
    bool even = rng.uniform() < 0.5;
    // non-increasing log values going away from the center
    std::vector<double> drop(static_cast<std::size_t>(m));
    for (double& d : drop) d = rng.uniform(0.0, 1.5);
    std::sort(drop.begin(), drop.end());
    std::vector<double> half(static_cast<std::size_t>(m) + 1);
    half[0] = 0.0;
    for (std::size_t i = 1; i < half.size(); ++i) half[i] = half[i - 1] - drop[i - 1];
    std::vector<double> f;
    if (even) {
        // two equal central cells, symmetric about a half-integer
        f.resize(2 * half.size());
        for (std::size_t i = 0; i < half.size(); ++i) {
            f[half.size() - 1 - i] = std::exp(half[i]);
            f[half.size() + i] = std::exp(half[i]);
        }
        return make_pmf(-static_cast<std::int64_t>(half.size()) + 1, std::move(f));
    }
    f.resize(2 * half.size() - 1);
    for (std::size_t i = 0; i < half.size(); ++i) {
        f[half.size() - 1 - i] = std::exp(half[i]);
        f[half.size() - 1 + i] = std::exp(half[i]);
    }
    return make_pmf(-static_cast<std::int64_t>(m), std::move(f));
}

// Random member of the classical families plus random log-concave sequences.
inline Pmf random_family_pmf(CorpusRng& rng, double tail_eps = 1e-12) {
    switch (rng.uniform_int(0, 8)) {
        case 0: return discrete_uniform_pmf(rng.uniform_int(1, 60));
        case 1: return bernoulli_pmf(rng.uniform(0.05, 0.95));
        case 2: return binomial_pmf(rng.uniform_int(1, 40), rng.uniform(0.05, 0.95));
        case 3: return poisson_pmf(rng.uniform(0.2, 15.0), tail_eps);
        case 4: return geometric_one_sided_pmf(rng.uniform(0.05, 0.9), tail_eps);
        case 5: return geometric_two_sided_pmf(rng.uniform(0.05, 0.9), tail_eps);
        case 6: {
            std::vector<double> ps(static_cast<std::size_t>(rng.uniform_int(1, 30)));
            for (double& p : ps) p = rng.uniform(0.05, 0.95);
            return poisson_binomial_pmf(ps);
        }
        case 7: return random_log_concave_pmf(rng);
        default: return random_symmetric_log_concave_pmf(rng);
    }
}

}  // namespace dlc
