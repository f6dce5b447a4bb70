#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dlc/corpus.hpp"
#include "dlc/entropy.hpp"
#include "dlc/extension.hpp"
#include "dlc/pmf.hpp"
#include "oracle.hpp"

using namespace dlc;

TEST_CASE("extension interpolates the pmf at integers") {
    CorpusRng rng(601);
    for (int i = 0; i < 50; ++i) {
        Pmf f = random_log_concave_pmf(rng, 25);
        PiecewiseExpDensity d = extend(f);
        for (std::int64_t k = f.first_site(); k <= f.last_site(); ++k)
            REQUIRE(evaluate(d, static_cast<double>(k)) ==
                    Catch::Approx(f.at(k)).epsilon(1e-14));
        REQUIRE(evaluate(d, static_cast<double>(f.first_site()) - 0.5) == 0.0);
        REQUIRE(evaluate(d, static_cast<double>(f.last_site()) + 0.5) == 0.0);
    }
}

TEST_CASE("extension of a geometric is log-linear between knots") {
    Pmf g = geometric_one_sided_pmf(0.4, 1e-13);
    PiecewiseExpDensity d = extend(g);
    // f(k) = (1-p) p^k, so the extension is (1-p) p^x on the whole range
    for (double x : {0.25, 1.5, 3.75, 7.1})
        CHECK(evaluate(d, x) == Catch::Approx(0.6 * std::pow(0.4, x)).epsilon(1e-12));
}

TEST_CASE("extend rejects non-log-concave input") {
    CHECK_THROWS_AS(extend(make_pmf(0, {0.2, 0.1, 0.3, 0.4})), std::invalid_argument);
}

TEST_CASE("segment moments match quadrature") {
    CorpusRng rng(77);
    for (int i = 0; i < 100; ++i) {
        double b = rng.uniform(-30.0, 5.0);
        if (i % 7 == 0) b = rng.uniform(-1e-7, 1e-7);  // exercise the series branch
        double i0, i1, i2;
        detail::segment_moments(b, i0, i1, i2);
        double q0 = oracle::integrate([b](double u) { return std::exp(b * u); }, 0.0, 1.0, 1e-14);
        double q1 = oracle::integrate([b](double u) { return u * std::exp(b * u); }, 0.0, 1.0, 1e-14);
        double q2 = oracle::integrate([b](double u) { return u * u * std::exp(b * u); }, 0.0, 1.0, 1e-14);
        CAPTURE(b);
        REQUIRE(i0 == Catch::Approx(q0).margin(1e-10).epsilon(1e-10));
        REQUIRE(i1 == Catch::Approx(q1).margin(1e-10).epsilon(1e-10));
        REQUIRE(i2 == Catch::Approx(q2).margin(1e-10).epsilon(1e-10));
    }
}

TEST_CASE("integral and second moment match quadrature on random pmfs") {
    CorpusRng rng(602);
    for (int i = 0; i < 40; ++i) {
        Pmf f = random_log_concave_pmf(rng, 20);
        if (f.size() < 2) continue;
        PiecewiseExpDensity d = extend(f);
        double lo = static_cast<double>(f.first_site());
        double hi = static_cast<double>(f.last_site());
        double qi = oracle::integrate([&](double x) { return evaluate(d, x); }, lo, hi, 1e-13);
        REQUIRE(integral(d) == Catch::Approx(qi).margin(1e-10).epsilon(1e-10));
        std::int64_t m = mode_site(f);
        double qs = oracle::integrate(
            [&](double x) {
                double c = x - static_cast<double>(m);
                return c * c * evaluate(d, x);
            },
            lo, hi, 1e-13);
        REQUIRE(second_moment_integral(d, m) == Catch::Approx(qs).margin(1e-9).epsilon(1e-9));
    }
}

TEST_CASE("extension total mass is sandwiched: 1 - f(mode) <= integral <= 1") {
    CorpusRng rng(603);
    for (int i = 0; i < 100; ++i) {
        Pmf f = random_log_concave_pmf(rng, 40);
        if (f.size() < 2) continue;
        PiecewiseExpDensity d = extend(f);
        double B = integral(d);
        double fm = m_functional(f);
        double tol = 1e-12 + 1e3 * f.tail_mass_bound;
        CAPTURE(i, B, fm);
        REQUIRE(B <= 1.0 + tol);
        REQUIRE(B >= 1.0 - fm - tol);
    }
}

TEST_CASE("second moment of the extension stays within [1/3, 3] of the discrete one") {
    CorpusRng rng(604);
    int small_peak_seen = 0;
    for (int i = 0; i < 200; ++i) {
        Pmf f = random_log_concave_pmf(rng, 50);
        if (f.size() < 2) continue;
        std::int64_t m = mode_site(f);
        double cont = second_moment_integral(extend(f), m);
        double disc = second_moment_about(f, m);
        double tol = 1e-10 + 1e3 * f.tail_mass_bound;
        CAPTURE(i, cont, disc);
        // the left inequality holds without conditions on the peak
        REQUIRE(disc / 3.0 <= cont + tol * std::max(1.0, disc));
        if (m_functional(f) <= 0.5) {
            ++small_peak_seen;
            REQUIRE(cont <= 3.0 * disc + tol * std::max(1.0, disc));
        }
    }
    REQUIRE(small_peak_seen > 50);
}

TEST_CASE("continuous mode bound g(m)^2 E(X-m)^2 <= 2") {
    CorpusRng rng(605);
    for (int i = 0; i < 100; ++i) {
        Pmf f = random_log_concave_pmf(rng, 40);
        if (f.size() < 2) continue;
        BoundReport r = continuous_mode_bound_check(extend(f));
        CAPTURE(i, r.lhs, r.rhs);
        REQUIRE(r.holds);
    }
    // consequence: M^2 Var of the discrete law stays bounded by 6
    for (int i = 0; i < 100; ++i) {
        Pmf f = random_log_concave_pmf(rng, 40);
        double M = m_functional(f);
        REQUIRE(M * M * variance(f) <= 6.0 + 1e-9);
        REQUIRE(M * M * second_moment_about(f, mode_site(f)) <= 6.0 + 1e-9);
    }
}

TEST_CASE("mode bound is tight for one-sided geometrics") {
    // the extension of (1-p)p^k is exactly exponential, the extremal case
    for (double p : {0.3, 0.5, 0.9, 0.99}) {
        Pmf g = geometric_one_sided_pmf(p, 1e-13);
        BoundReport r = continuous_mode_bound_check(extend(g));
        CAPTURE(p, r.lhs, r.slack);
        REQUIRE(r.holds);
        REQUIRE(r.lhs == Catch::Approx(2.0).margin(1e-4));
    }
}
