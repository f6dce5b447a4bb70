#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dlc/corpus.hpp"
#include "dlc/entropy.hpp"
#include "dlc/pmf.hpp"
#include "oracle.hpp"

using namespace dlc;

TEST_CASE("Renyi entropy of uniform and point mass") {
    Pmf u = discrete_uniform_pmf(8);
    for (auto order : {AlphaOrder::finite(0.5), AlphaOrder::shannon(), AlphaOrder::finite(2.0),
                       AlphaOrder::finite(75.0), AlphaOrder::infinity()}) {
        CHECK(renyi_entropy(u, order) == Catch::Approx(std::log(8.0)).epsilon(1e-12));
        CHECK(renyi_entropy(point_mass(3), order) == Catch::Approx(0.0).margin(1e-15));
    }
}

TEST_CASE("two-sided geometric Shannon entropy closed form") {
    for (double p : {0.2, 0.5, 0.8}) {
        Pmf g = geometric_two_sided_pmf(p, 1e-13);
        double expected = -std::log(1.0 - p) + std::log(1.0 + p) - 2.0 * p * std::log(p) / ((1.0 - p) * (1.0 + p));
        CHECK(renyi_entropy(g, AlphaOrder::shannon()) == Catch::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("entropy power values") {
    CHECK(entropy_power(discrete_uniform_pmf(5), AlphaOrder::finite(3.0)) == Catch::Approx(25.0).epsilon(1e-12));
    CHECK(entropy_power(point_mass(0), AlphaOrder::infinity()) == Catch::Approx(1.0));
    // M = 1/3 for p = 1/2, so N_inf = 9
    CHECK(entropy_power(geometric_two_sided_pmf(0.5, 1e-13), AlphaOrder::infinity()) ==
          Catch::Approx(9.0).epsilon(1e-9));
}

TEST_CASE("delta values") {
    CHECK(delta(point_mass(0), AlphaOrder::finite(2.0)) == Catch::Approx(0.0).margin(1e-15));
    for (double p : {0.3, 0.6}) {
        Pmf g = geometric_two_sided_pmf(p, 1e-13);
        CHECK(delta(g, AlphaOrder::infinity()) ==
              Catch::Approx(4.0 * p / ((1.0 - p) * (1.0 - p))).epsilon(1e-9));
    }
    CHECK(delta(binomial_pmf(4, 0.5), AlphaOrder::infinity()) == Catch::Approx(55.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("M functional") {
    CHECK(m_functional(point_mass(5)) == 1.0);
    for (double p : {0.25, 0.7})
        CHECK(m_functional(geometric_two_sided_pmf(p, 1e-13)) ==
              Catch::Approx((1.0 - p) / (1.0 + p)).epsilon(1e-10));
    CHECK(m_functional(binomial_pmf(4, 0.5)) == Catch::Approx(6.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("concentration function") {
    Pmf u4 = discrete_uniform_pmf(4);
    CHECK(concentration(u4, 1) == Catch::Approx(0.5).epsilon(1e-14));
    CHECK(concentration(u4, 3) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(concentration(u4, 10) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(concentration(binomial_pmf(4, 0.5), 1) == Catch::Approx(10.0 / 16.0).epsilon(1e-13));
    CHECK(concentration(u4, 0) == m_functional(u4));
}

TEST_CASE("sliding window equals brute force exactly") {
    CorpusRng rng(2024);
    for (int i = 0; i < 200; ++i) {
        Pmf f = random_family_pmf(rng);
        std::int64_t lambda = rng.uniform_int(0, 12);
        REQUIRE(concentration(f, lambda) == oracle::concentration(f, lambda));
    }
}

TEST_CASE("smoothing identity Q(X;lambda) = (lambda+1) M(X+U)") {
    CorpusRng rng(5150);
    for (int i = 0; i < 100; ++i) {
        Pmf f = random_log_concave_pmf(rng, 40);
        for (std::int64_t lambda = 0; lambda <= 10; ++lambda) {
            Pmf s = smooth_with_discrete_uniform(f, lambda);
            double lhs = concentration(f, lambda);
            double rhs = (lambda + 1.0) * m_functional(s);
            REQUIRE(std::abs(lhs - rhs) <= 1e-14);
        }
    }
    // point mass smoothed is the uniform itself
    Pmf s = smooth_with_discrete_uniform(point_mass(0), 2);
    for (int k = 0; k < 3; ++k) CHECK(s.at(k) == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("entropy is non-increasing in the order") {
    CorpusRng rng(31337);
    std::vector<AlphaOrder> ladder = {AlphaOrder::finite(0.5), AlphaOrder::finite(0.9),
                                      AlphaOrder::shannon(),   AlphaOrder::finite(1.5),
                                      AlphaOrder::finite(2.0), AlphaOrder::finite(10.0),
                                      AlphaOrder::finite(80.0), AlphaOrder::infinity()};
    for (int i = 0; i < 100; ++i) {
        Pmf f = random_family_pmf(rng);
        double prev = renyi_entropy(f, ladder[0]);
        for (std::size_t j = 1; j < ladder.size(); ++j) {
            double h = renyi_entropy(f, ladder[j]);
            REQUIRE(h <= prev + 1e-12);
            prev = h;
        }
        REQUIRE(entropy_power(f, AlphaOrder::finite(2.0)) >= 1.0);
    }
}

TEST_CASE("collision identity M(X-Y) = sum f^2") {
    CorpusRng rng(404);
    for (int i = 0; i < 100; ++i) {
        Pmf f = random_log_concave_pmf(rng, 40);
        double collision = 0.0;
        for (double p : f.probs) collision += p * p;
        REQUIRE(std::abs(m_functional(convolve(f, reverse(f))) - collision) <= 1e-14);
    }
}

TEST_CASE("alpha order construction rules") {
    CHECK_THROWS_AS(AlphaOrder::finite(1.0 + 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(AlphaOrder::finite(-2.0), std::invalid_argument);
    CHECK_NOTHROW(AlphaOrder::finite(1.0 + 1e-8));
}
