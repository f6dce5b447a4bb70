#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "dlc/pmf.hpp"
#include "dlc/report.hpp"
#include "dlc/specfile.hpp"

using namespace dlc;

TEST_CASE("spec parsing: families and fields") {
    DistributionSpec s = parse_distribution_spec("family = binomial\nn = 4\np = 0.5\n");
    CHECK(s.family == Family::binomial);
    CHECK(s.n == 4);
    CHECK(s.p == 0.5);

    s = parse_distribution_spec("family=poisson; lambda=2.5  # inline separator");
    CHECK(s.family == Family::poisson);
    CHECK(s.lambda == 2.5);

    s = parse_distribution_spec("# comment only\nfamily = explicit\noffset = -2\nprobs = [0.25, 0.5, 0.25]\n");
    CHECK(s.family == Family::explicit_pmf);
    CHECK(s.offset == -2);
    REQUIRE(s.probs.size() == 3);
    CHECK(s.probs[1] == 0.5);

    s = parse_distribution_spec("family = poisson_binomial\np_list = 0.1 0.9 0.5\n");
    REQUIRE(s.p_list.size() == 3);
    CHECK(s.p_list[2] == 0.5);

    s = parse_distribution_spec("family = geometric_two_sided\np = 0.3\n");
    CHECK(s.family == Family::geometric_two_sided);
}

TEST_CASE("spec parsing: diagnostics carry line numbers") {
    using Catch::Matchers::ContainsSubstring;
    CHECK_THROWS_WITH(parse_distribution_spec("family = binomial\nnonsense\n"),
                      ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_distribution_spec("family = binomial\n = 3\n"), ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_distribution_spec("p = 0.5\n"), ContainsSubstring("family"));
    CHECK_THROWS_WITH(parse_distribution_spec("family = binomial\np = 0.5\n"), ContainsSubstring("n"));
    CHECK_THROWS_WITH(parse_distribution_spec("family = zeta\n"), ContainsSubstring("zeta"));
}

TEST_CASE("parsed specs build") {
    Pmf f = build(parse_distribution_spec("family = binomial; n = 4; p = 0.5"));
    CHECK(f.probs.size() == 5);
    CHECK(f.probs[2] == Catch::Approx(6.0 / 16.0));
    Pmf e = build(parse_distribution_spec("family = explicit; offset = 1; probs = 1 2 1"));
    CHECK(e.at(2) == Catch::Approx(0.5));
    CHECK(e.offset == 1);
}

TEST_CASE("spec file round trip") {
    std::string path = "cli_support_roundtrip.spec";
    {
        std::ofstream out(path);
        out << "family = geometric_one_sided\np = 0.25\n";
    }
    DistributionSpec s = load_distribution_spec(path);
    CHECK(s.family == Family::geometric_one_sided);
    CHECK(s.p == 0.25);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_distribution_spec("no_such_file.spec"), std::runtime_error);
}

TEST_CASE("report serialization") {
    BoundReport r = make_report("demo", 1.0, 2.0, 1e-10);
    r.context["alpha"] = 2.0;
    std::string csv = to_csv_row(r);
    CHECK(csv.find("demo,1,2,1,true,") == 0);
    CHECK(csv.find("alpha=2") != std::string::npos);
    CHECK(csv_header().find("bound_id") == 0);

    std::string rec = to_structured_record(r);
    CHECK(rec.find("bound_id=demo") != std::string::npos);
    CHECK(rec.find("holds=true") != std::string::npos);

    std::string txt = to_text_row(make_report("fail-demo", 2.0, 1.0, 1e-10));
    CHECK(txt.find("FAIL") != std::string::npos);

    // full precision round trip
    double x = 0.1 + 0.2;
    CHECK(std::stod(fmt_double(x)) == x);
}
