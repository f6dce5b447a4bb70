#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "dlc/bernoulli.hpp"
#include "dlc/corpus.hpp"
#include "dlc/entropy.hpp"
#include "oracle.hpp"

using namespace dlc;

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(validate(BernoulliSumSpec{{}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(BernoulliSumSpec{{0.5, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(BernoulliSumSpec{{0.0}}), std::invalid_argument);
    CHECK_NOTHROW(validate(BernoulliSumSpec{{0.5, 0.1, 0.9}}));
    CHECK(BernoulliSumSpec{{0.5, 0.5}}.variance() == Catch::Approx(0.5));
}

TEST_CASE("poisson binomial pmf") {
    Pmf f = poisson_binomial(BernoulliSumSpec{{0.5, 0.5, 0.5}});
    REQUIRE(f.probs.size() == 4);
    CHECK(f.probs[0] == Catch::Approx(0.125));
    CHECK(f.probs[1] == Catch::Approx(0.375));
    Pmf g = poisson_binomial(BernoulliSumSpec{{0.2, 0.7}});
    CHECK(g.at(0) == Catch::Approx(0.8 * 0.3).epsilon(1e-14));
    CHECK(g.at(1) == Catch::Approx(0.2 * 0.3 + 0.8 * 0.7).epsilon(1e-14));
    CHECK(g.at(2) == Catch::Approx(0.2 * 0.7).epsilon(1e-14));
}

TEST_CASE("characteristic modulus matches complex arithmetic") {
    CorpusRng rng(1010);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> ps(static_cast<std::size_t>(rng.uniform_int(1, 25)));
        for (double& p : ps) p = rng.uniform(0.02, 0.98);
        double t = rng.uniform(-8.0, 8.0);
        BernoulliSumSpec spec{ps};
        REQUIRE(char_function_modulus(spec, t) ==
                Catch::Approx(oracle::char_modulus(ps, t)).margin(1e-14).epsilon(1e-12));
    }
}

TEST_CASE("esseen bound dominates the concentration function") {
    CorpusRng rng(1020);
    for (int i = 0; i < 40; ++i) {
        std::vector<double> ps(static_cast<std::size_t>(rng.uniform_int(2, 40)));
        for (double& p : ps) p = rng.uniform(0.05, 0.95);
        BernoulliSumSpec spec{ps};
        Pmf f = poisson_binomial(spec);
        for (double lambda : {1.0, 2.0, 5.0}) {
            double q = concentration(f, static_cast<std::int64_t>(lambda));
            double bound = esseen_bound(spec, lambda);
            CAPTURE(i, lambda, q, bound);
            REQUIRE(q <= bound + 1e-9);
        }
    }
    CHECK_THROWS_AS(esseen_bound(BernoulliSumSpec{{0.5}}, 0.0), std::invalid_argument);
}

TEST_CASE("peak bound with the sharp constant") {
    double c = optimal_constant_c();
    CHECK(c >= 0.4687);
    CHECK(c <= 0.4689);
    CorpusRng rng(1030);
    for (int i = 0; i < 100; ++i) {
        std::vector<double> ps(static_cast<std::size_t>(rng.uniform_int(1, 100)));
        for (double& p : ps) p = rng.uniform(0.02, 0.98);
        BernoulliSumSpec spec{ps};
        Pmf f = poisson_binomial(spec);
        double M = m_functional(f);
        double sd = std::sqrt(spec.variance());
        CAPTURE(i, M, sd);
        REQUIRE(M <= 1.28 / sd + 1e-12);
        REQUIRE(M <= c / sd + 1e-12);
    }
}

TEST_CASE("objective and crossover values") {
    // the objective at lambda = 1/2: e^{-1} sum (2^{-k}/k!)^2 = e^-1 I_0(1)
    double direct = 0.0;
    double term = 1.0;
    for (int k = 0; k < 60; ++k) {
        direct += term * term;
        term *= 0.5 / (k + 1);
    }
    direct *= std::exp(-1.0);
    CHECK(bcv_objective(0.5) == Catch::Approx(direct).epsilon(1e-12));
    CHECK(bcv_objective(0.0) == 0.0);

    double cv = crossover_variance();
    CHECK(cv == Catch::Approx(0.0704).margin(2e-4));
    double c = optimal_constant_c();
    CHECK(cv == Catch::Approx(c * c / (4.0 * (1.0 - c * c))).epsilon(1e-12));
    // below the crossover the unconditional bound 2/sqrt(1+4Var) wins
    double v = cv / 2.0;
    CHECK(2.0 / std::sqrt(1.0 + 4.0 * v) < c / std::sqrt(v));
    v = cv * 2.0;
    CHECK(2.0 / std::sqrt(1.0 + 4.0 * v) > c / std::sqrt(v));
}

TEST_CASE("esseen chain constant") {
    double exact = kEsseenPrefactor * std::sqrt(std::asin(1.0));  // (96/95)^2 sqrt(pi/2)
    CHECK(exact == Catch::Approx(1.2798386).margin(1e-6));
    CHECK(exact < 1.28);
}

TEST_CASE("entropy power of Bernoulli sums grows like the variance") {
    CorpusRng rng(1040);
    for (int i = 0; i < 60; ++i) {
        std::vector<double> ps(static_cast<std::size_t>(rng.uniform_int(2, 50)));
        for (double& p : ps) p = rng.uniform(0.05, 0.95);
        BernoulliSumSpec spec{ps};
        for (double alpha : {2.0, 3.0, 10.0}) {
            BoundReport r = check_mr_bound(spec, alpha);
            CAPTURE(i, alpha, r.lhs, r.rhs);
            REQUIRE(r.holds);
        }
    }
    CHECK_THROWS_AS(check_mr_bound(BernoulliSumSpec{{0.5}}, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(
        check_mr_bound(BernoulliSumSpec{{0.5}}, std::numeric_limits<double>::infinity()),
        std::invalid_argument);
}
