// Command-line front end: analyze a distribution, verify the inequality
// suite against it, print the extremal-density constants, run the Bernoulli
// sum bounds, or sweep a seeded random corpus.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dlc/dlc.hpp"

namespace {

enum class Format { text, csv, structured };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "structured") return Format::structured;
    throw CLI::ValidationError("--format must be text, csv or structured");
}

dlc::AlphaOrder parse_alpha(const std::string& s) {
    if (s == "inf" || s == "infinity") return dlc::AlphaOrder::infinity();
    if (s == "1" || s == "shannon") return dlc::AlphaOrder::shannon();
    return dlc::AlphaOrder::finite(std::stod(s));
}

struct Emitter {
    Format format = Format::text;
    bool header_done = false;

    void report(const dlc::BoundReport& r) {
        switch (format) {
            case Format::text: std::printf("%s\n", dlc::to_text_row(r).c_str()); break;
            case Format::csv:
                if (!header_done) {
                    std::printf("%s\n", dlc::csv_header().c_str());
                    header_done = true;
                }
                std::printf("%s\n", dlc::to_csv_row(r).c_str());
                break;
            case Format::structured: std::printf("%s\n", dlc::to_structured_record(r).c_str()); break;
        }
    }
    void scalar(const std::string& key, double value) {
        if (format == Format::csv)
            std::printf("%s,%s\n", key.c_str(), dlc::fmt_double(value).c_str());
        else
            std::printf("%s = %s\n", key.c_str(), dlc::fmt_double(value).c_str());
    }
    void skipped(const std::string& what, const std::string& reason) {
        std::fprintf(stderr, "skipped %s: %s\n", what.c_str(), reason.c_str());
    }
};

dlc::Pmf load_pmf(const std::string& spec_path, const std::string& inline_spec, double tail_eps) {
    if (!spec_path.empty() && !inline_spec.empty())
        throw CLI::ValidationError("give exactly one of --spec / --inline");
    if (!spec_path.empty()) return dlc::build(dlc::load_distribution_spec(spec_path), tail_eps);
    if (!inline_spec.empty()) return dlc::build(dlc::parse_distribution_spec(inline_spec), tail_eps);
    throw CLI::ValidationError("give exactly one of --spec / --inline");
}

// Every applicable checker; preconditions that fail are surfaced as skipped
// rows, never as violations.
bool verify_pmf(const dlc::Pmf& f, const std::vector<dlc::AlphaOrder>& alphas,
                const std::vector<std::int64_t>& lambdas, Emitter& em) {
    bool all_hold = true;
    auto emit_all = [&](const std::vector<dlc::BoundReport>& rs) {
        for (const auto& r : rs) {
            em.report(r);
            all_hold = all_hold && r.holds;
        }
    };
    emit_all(dlc::check_thm_1_1(f));
    bool lc = dlc::is_log_concave(f);
    bool sym = dlc::is_symmetric(f);
    for (const auto& a : alphas) {
        if (a.is_finite() && a.value() < 1.0) {
            em.skipped("eq3.1/eq3.3 alpha=" + a.str(), "stated for alpha >= 1");
            continue;
        }
        emit_all(dlc::check_variance_entropy_upper(f, a));
        if (lc && a.is_finite() && a.value() > 1.0) emit_all(dlc::check_eq_7_4(f, a.value()));
    }
    if (lc) {
        emit_all(dlc::check_prop_7_4(f));
        em.report(dlc::check_collision_remark(f));
        all_hold = all_hold && dlc::check_collision_remark(f).holds;
        if (sym)
            em.report(dlc::check_prop_7_3(f, dlc::psi_sqrt1p2x()));
        else
            em.skipped("prop7.3", "requires a symmetric pmf");
    } else {
        em.skipped("eq1.4-upper/prop7.4/eq7.4/collision", "pmf is not log-concave");
    }
    for (std::int64_t lam : lambdas) emit_all(dlc::check_concentration_bounds(f, lam));
    return all_hold;
}

int cmd_analyze(const dlc::Pmf& f, const std::vector<dlc::AlphaOrder>& alphas,
                const std::vector<std::int64_t>& lambdas, Emitter& em) {
    em.scalar("M", dlc::m_functional(f));
    em.scalar("Var", dlc::variance(f));
    em.scalar("support_size", static_cast<double>(f.size()));
    em.scalar("tail_mass_bound", f.tail_mass_bound);
    for (std::int64_t lam : lambdas)
        em.scalar("Q[lambda=" + std::to_string(lam) + "]", dlc::concentration(f, lam));
    for (const auto& a : alphas) {
        em.scalar("H[alpha=" + a.str() + "]", dlc::renyi_entropy(f, a));
        em.scalar("N[alpha=" + a.str() + "]", dlc::entropy_power(f, a));
        em.scalar("Delta[alpha=" + a.str() + "]", dlc::delta(f, a));
    }
    return 0;
}

int cmd_constants(const std::vector<double>& alphas, Emitter& em) {
    std::printf("%-12s %-18s %-18s %-18s\n", "alpha", "c_alpha", "A_alpha", "var_extremal");
    for (double a : alphas) {
        dlc::MorigutiConstants m = dlc::compute_constants(a);
        std::printf("%-12.6g %-18.12g %-18.12g %-18.12g\n", m.alpha, m.c_alpha, m.a_alpha, m.var_extremal);
    }
    return 0;
}

int cmd_esseen(const std::vector<double>& p_list, Emitter& em) {
    dlc::BernoulliSumSpec spec{p_list};
    dlc::Pmf f = dlc::poisson_binomial(spec);
    double M = dlc::m_functional(f);
    double var = dlc::variance(f);
    em.scalar("M", M);
    em.scalar("Var", var);
    const double pi = 3.14159265358979323846;
    double esseen = dlc::esseen_bound(spec, 1.0 / pi);
    em.scalar("esseen_bound[lambda=1/pi]", esseen);
    double exact_chain = dlc::kEsseenPrefactor * std::sqrt(pi / 2.0);
    em.scalar("chain_constant_exact", exact_chain);          // (96/95)^2 sqrt(pi/2)
    em.scalar("chain_constant_published", 1.28);             // the rounded form
    em.scalar("bound_1.28_over_sqrt_var", 1.28 / std::sqrt(var));
    em.scalar("bound_2_over_sqrt_1p4var", 2.0 / std::sqrt(1.0 + 4.0 * var));
    double c = dlc::optimal_constant_c();
    em.scalar("bound_c_over_sqrt_var", c / std::sqrt(var));
    em.scalar("optimal_constant_c", c);
    em.scalar("crossover_variance", dlc::crossover_variance());
    bool ok = true;
    auto check = [&](const char* id, double lhs, double rhs) {
        dlc::BoundReport r = dlc::make_report(id, lhs, rhs, dlc::bound_tol(lhs, rhs, 0.0));
        em.report(r);
        ok = ok && r.holds;
    };
    check("eq10.1-esseen", M, esseen);
    check("eq10.2-left", M, 2.0 / std::sqrt(1.0 + 4.0 * var));
    check("eq10.2-right", M, 1.0 / std::sqrt(var));
    check("eq10.3-sharp", M, c / std::sqrt(var));
    dlc::BoundReport mr = dlc::check_mr_bound(spec, 2.0);
    em.report(mr);
    ok = ok && mr.holds;
    return ok ? 0 : 1;
}

int cmd_sweep(std::uint64_t seed, int count, bool symmetric_only, double tail_eps,
              const std::vector<dlc::AlphaOrder>& alphas, const std::vector<std::int64_t>& lambdas,
              Emitter& em) {
    struct Agg {
        int n = 0;
        int fails = 0;
        double min_slack = std::numeric_limits<double>::infinity();
    };
    std::map<std::string, Agg> agg;
    dlc::CorpusRng rng(seed);
    struct SilentEmitter : Emitter {};
    for (int i = 0; i < count; ++i) {
        dlc::Pmf f = symmetric_only ? dlc::random_symmetric_log_concave_pmf(rng)
                                    : dlc::random_family_pmf(rng, tail_eps);
        auto collect = [&](const std::vector<dlc::BoundReport>& rs) {
            for (const auto& r : rs) {
                Agg& a = agg[r.bound_id];
                ++a.n;
                if (!r.holds) ++a.fails;
                a.min_slack = std::min(a.min_slack, r.slack);
            }
        };
        collect(dlc::check_thm_1_1(f));
        bool lc = dlc::is_log_concave(f);
        for (const auto& a : alphas) {
            if (a.is_finite() && a.value() < 1.0) continue;
            collect(dlc::check_variance_entropy_upper(f, a));
            if (lc && a.is_finite() && a.value() > 1.0) collect(dlc::check_eq_7_4(f, a.value()));
        }
        if (lc) {
            collect(dlc::check_prop_7_4(f));
            collect({dlc::check_collision_remark(f)});
            if (dlc::is_symmetric(f)) collect({dlc::check_prop_7_3(f, dlc::psi_sqrt1p2x())});
        }
        for (std::int64_t lam : lambdas) collect(dlc::check_concentration_bounds(f, lam));
    }
    bool all_ok = true;
    std::printf("%-22s %8s %8s %-16s\n", "bound_id", "checked", "fails", "min_slack");
    for (const auto& [id, a] : agg) {
        std::printf("%-22s %8d %8d %-16.8g\n", id.c_str(), a.n, a.fails, a.min_slack);
        all_ok = all_ok && a.fails == 0;
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete log-concave distribution toolkit"};
    app.require_subcommand(1);

    std::string spec_path, inline_spec, format_str = "text";
    std::vector<std::string> alpha_strs;
    std::vector<std::int64_t> lambdas;
    double tail_eps = 1e-12;
    std::uint64_t seed = 0;
    int count = 1000;
    bool symmetric_only = false;
    std::vector<double> p_list;
    std::vector<double> const_alphas;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_option("--alpha", alpha_strs, "Renyi order (repeatable): a number, 'shannon'/'1', or 'inf'");
        sub->add_option("--lambda", lambdas, "concentration window width (repeatable)");
        sub->add_option("--tail-eps", tail_eps, "truncation tail mass for infinite-support families");
        sub->add_option("--format", format_str, "text | csv | structured");
        if (with_input) {
            sub->add_option("--spec", spec_path, "path to a distribution spec file");
            sub->add_option("--inline", inline_spec, "inline spec, ';'-separated key=value pairs");
        }
    };

    CLI::App* analyze = app.add_subcommand("analyze", "print M, Var, Q, and Renyi entropies");
    add_common(analyze, true);
    CLI::App* verify = app.add_subcommand("verify", "run every applicable inequality checker");
    add_common(verify, true);
    CLI::App* constants = app.add_subcommand("constants", "extremal-density constants table");
    constants->add_option("--alpha", const_alphas, "alpha values (repeatable)");
    CLI::App* esseen = app.add_subcommand("esseen", "Bernoulli-sum bounds");
    esseen->add_option("--p", p_list, "success probabilities (repeatable)")->required();
    esseen->add_option("--format", format_str, "text | csv | structured");
    CLI::App* sweep = app.add_subcommand("sweep", "seeded random corpus, aggregated pass/fail per bound");
    add_common(sweep, false);
    sweep->add_option("--seed", seed, "corpus seed");
    sweep->add_option("--count", count, "corpus size");
    sweep->add_flag("--symmetric-only", symmetric_only, "only symmetric log-concave pmfs");

    CLI11_PARSE(app, argc, argv);

    try {
        Emitter em;
        em.format = parse_format(format_str);
        std::vector<dlc::AlphaOrder> alphas;
        for (const auto& s : alpha_strs) alphas.push_back(parse_alpha(s));
        if (alphas.empty())
            alphas = {dlc::AlphaOrder::shannon(), dlc::AlphaOrder::finite(2.0), dlc::AlphaOrder::infinity()};
        if (lambdas.empty()) lambdas = {0, 1, 2};

        if (analyze->parsed())
            return cmd_analyze(load_pmf(spec_path, inline_spec, tail_eps), alphas, lambdas, em);
        if (verify->parsed())
            return verify_pmf(load_pmf(spec_path, inline_spec, tail_eps), alphas, lambdas, em) ? 0 : 1;
        if (constants->parsed()) {
            if (const_alphas.empty()) const_alphas = {1.5, 2.0, 3.0, 5.0, 10.0, 100.0, 1000.0};
            return cmd_constants(const_alphas, em);
        }
        if (esseen->parsed()) return cmd_esseen(p_list, em);
        if (sweep->parsed()) return cmd_sweep(seed, count, symmetric_only, tail_eps, alphas, lambdas, em);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
