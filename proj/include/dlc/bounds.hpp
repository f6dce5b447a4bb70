#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlc/alpha.hpp"
#include "dlc/entropy.hpp"
#include "dlc/golden.hpp"
#include "dlc/logconcave.hpp"
#include "dlc/moriguti.hpp"
#include "dlc/pmf.hpp"
#include "dlc/report.hpp"

namespace dlc {

// Tolerance = (float_tol + amplification * discarded tail mass) scaled by the
// magnitude of the compared sides; truncated inputs must not produce false
// violations.
inline double bound_tol(double lhs, double rhs, double tail_mass, double float_tol = 1e-10,
                        double tail_amp = 1e3) {
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return (float_tol + tail_amp * tail_mass) * scale;
}

namespace detail {

// Concentration-bound closed forms; at lambda = 0 these evaluate with the
// exact same floating-point operations as the Theorem 1.1 forms.
inline double conc_lower(double lambda, double var) {
    double l1 = lambda + 1.0;
    return l1 / std::sqrt(l1 * l1 + 12.0 * var);
}
inline double conc_upper(double lambda, double var) {
    double l1 = lambda + 1.0;
    return 2.0 * l1 / std::sqrt(1.0 + lambda * (lambda + 2.0) / 3.0 + 4.0 * var);
}
inline double conc_upper_sym(double lambda, double var) {
    double l1 = lambda + 1.0;
    return l1 / std::sqrt(1.0 + lambda * (lambda + 2.0) / 6.0 + 2.0 * var);
}

inline AlphaOrder order_from_real(double alpha) {
    if (std::isinf(alpha)) return AlphaOrder::infinity();
    return AlphaOrder::finite(alpha);
}

}  // namespace detail

// eq1.4-lower (unconditional), eq1.4-upper (log-concave), eq1.5 (symmetric).
inline std::vector<BoundReport> check_thm_1_1(const Pmf& f) {
    double var = variance(f);
    double M = m_functional(f);
    double tail = f.tail_mass_bound;
    std::vector<BoundReport> out;
    {
        double lhs = detail::conc_lower(0.0, var);
        BoundReport r = make_report("eq1.4-lower", lhs, M, bound_tol(lhs, M, tail));
        r.context["Var"] = var;
        r.context["M"] = M;
        out.push_back(r);
    }
    if (is_log_concave(f)) {
        double rhs = detail::conc_upper(0.0, var);
        BoundReport r = make_report("eq1.4-upper", M, rhs, bound_tol(M, rhs, tail));
        r.context["Var"] = var;
        r.context["M"] = M;
        out.push_back(r);
        if (is_symmetric(f)) {
            double rhs_s = detail::conc_upper_sym(0.0, var);
            BoundReport rs = make_report("eq1.5", M, rhs_s, bound_tol(M, rhs_s, tail));
            rs.context["Var"] = var;
            rs.context["M"] = M;
            out.push_back(rs);
        }
    }
    return out;
}

// A_alpha with the Shannon and min-entropy limits filled in.
inline double a_alpha_for(const AlphaOrder& order) {
    switch (order.kind()) {
        case AlphaOrder::Kind::shannon: return kTwoPiE;
        case AlphaOrder::Kind::infinity: return 12.0;
        case AlphaOrder::Kind::finite: {
            double a = order.value();
            if (a <= 1.0) throw std::invalid_argument("A_alpha needs alpha >= 1");
            if (a <= 1.0 + 1e-6) return kTwoPiE;
            if (a > 1e6) return 12.0;  // asymptotic regime; A decreases to 12
            return compute_constants(a).a_alpha;
        }
    }
    return 0.0;
}

// eq3.1: N_alpha <= A_alpha (1/12 + Var); eq3.2: N_inf <= 1 + 12 Var;
// eq3.3: N_alpha <= 1 + 4(3a-1)/(a-1) Var. None need log-concavity.
inline std::vector<BoundReport> check_variance_entropy_upper(const Pmf& f, const AlphaOrder& order) {
    if (order.is_finite() && order.value() < 1.0)
        throw std::invalid_argument("variance upper bounds need alpha >= 1");
    double var = variance(f);
    double tail = f.tail_mass_bound;
    std::vector<BoundReport> out;
    double n_alpha = entropy_power(f, order);
    {
        double rhs = a_alpha_for(order) * (1.0 / 12.0 + var);
        BoundReport r = make_report("eq3.1", n_alpha, rhs, bound_tol(n_alpha, rhs, tail));
        r.context["alpha"] = order.numeric();
        r.context["Var"] = var;
        out.push_back(r);
    }
    {
        double n_inf = entropy_power(f, AlphaOrder::infinity());
        double rhs = 1.0 + 12.0 * var;
        BoundReport r = make_report("eq3.2", n_inf, rhs, bound_tol(n_inf, rhs, tail));
        r.context["Var"] = var;
        out.push_back(r);
    }
    if (!order.is_shannon()) {
        double factor = order.is_infinity() ? 12.0 : 4.0 * (3.0 * order.value() - 1.0) / (order.value() - 1.0);
        double rhs = 1.0 + factor * var;
        BoundReport r = make_report("eq3.3", n_alpha, rhs, bound_tol(n_alpha, rhs, tail));
        r.context["alpha"] = order.numeric();
        r.context["Var"] = var;
        out.push_back(r);
    }
    return out;
}

// Monotone non-decreasing weight for Prop 7.3.
struct PsiFunction {
    std::string id;
    std::function<double(double)> fn;
    bool closed_form_unit_sup = false;  // sup over p is identically 1
};

inline PsiFunction psi_sqrt1p2x() {
    return {"sqrt1p2x", [](double x) { return std::sqrt(1.0 + 2.0 * x); }, true};
}

inline PsiFunction psi_identity() {
    return {"identity", [](double x) { return x; }, false};
}

// Monotone tabulated weight with linear interpolation (flat extrapolation).
inline PsiFunction psi_tabulated(std::string id, std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("bad psi table");
    auto fn = [xs = std::move(xs), ys = std::move(ys)](double x) {
        if (x <= xs.front()) return ys.front();
        if (x >= xs.back()) return ys.back();
        std::size_t i = 1;
        while (xs[i] < x) ++i;
        double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return (1.0 - t) * ys[i - 1] + t * ys[i];
    };
    return {std::move(id), fn, false};
}

inline PsiFunction psi_from_id(const std::string& id) {
    if (id == "sqrt1p2x") return psi_sqrt1p2x();
    if (id == "identity") return psi_identity();
    throw std::invalid_argument("unknown psi id: " + id);
}

// Prop 7.3: M(X) Psi(Var) <= sup_p [(1-p)/(1+p) Psi(2p/(1-p)^2)] for
// symmetric log-concave X. For sqrt1p2x the supremum is 1 identically.
inline BoundReport check_prop_7_3(const Pmf& f, const PsiFunction& psi) {
    if (!is_symmetric(f)) throw std::invalid_argument("prop 7.3 requires a symmetric pmf");
    if (!is_log_concave(f)) throw std::invalid_argument("prop 7.3 requires a log-concave pmf");
    double var = variance(f);
    double M = m_functional(f);
    double lhs = M * psi.fn(var);
    double rhs;
    if (psi.closed_form_unit_sup) {
        rhs = 1.0;
    } else {
        auto h = [&psi](double p) {
            return (1.0 - p) / (1.0 + p) * psi.fn(2.0 * p / ((1.0 - p) * (1.0 - p)));
        };
        auto [gx, gv] = grid_maximize(h, 0.0, 1.0 - 1e-6, 256);
        double lo = std::max(0.0, gx - 2.0 / 256.0);
        double hi = std::min(1.0 - 1e-6, gx + 2.0 / 256.0);
        auto [bx, bv] = golden_maximize(h, lo, hi);
        rhs = std::max(gv, bv);
    }
    BoundReport r = make_report("prop7.3[" + psi.id + "]", lhs, rhs, bound_tol(lhs, rhs, f.tail_mass_bound));
    r.context["Var"] = var;
    r.context["M"] = M;
    return r;
}

// eq7.2: M^2 (1 + 4 Var) <= 4; eq7.3: M^2 Var <= 1;
// eq7.7 proof chain: M^2 <= 4 M^2(X - Y).
inline std::vector<BoundReport> check_prop_7_4(const Pmf& f) {
    if (!is_log_concave(f)) throw std::invalid_argument("prop 7.4 requires a log-concave pmf");
    double var = variance(f);
    double M = m_functional(f);
    double tail = f.tail_mass_bound;
    std::vector<BoundReport> out;
    {
        double lhs = M * M * (1.0 + 4.0 * var);
        BoundReport r = make_report("eq7.2", lhs, 4.0, bound_tol(lhs, 4.0, tail));
        r.context["Var"] = var;
        r.context["M"] = M;
        out.push_back(r);
    }
    {
        double lhs = M * M * var;
        BoundReport r = make_report("eq7.3", lhs, 1.0, bound_tol(lhs, 1.0, tail));
        r.context["Var"] = var;
        out.push_back(r);
    }
    {
        Pmf sym = convolve(f, reverse(f));  // X - Y for an independent copy Y
        double Msym = m_functional(sym);
        double lhs = M * M;
        double rhs = 4.0 * Msym * Msym;
        BoundReport r = make_report("eq7.7", lhs, rhs, bound_tol(lhs, rhs, tail));
        r.context["M_sym"] = Msym;
        out.push_back(r);
    }
    return out;
}

// eq7.4: H_alpha <= H_inf + log(alpha)/(alpha-1) for log-concave X, alpha > 1.
// At alpha = 2 also the equivalent mass form eq7.5: M <= 2 sum f(k)^2.
inline std::vector<BoundReport> check_eq_7_4(const Pmf& f, double alpha) {
    if (!(alpha > 1.0) || std::isinf(alpha)) throw std::invalid_argument("eq 7.4 tested for alpha in (1, inf)");
    if (!is_log_concave(f)) throw std::invalid_argument("eq 7.4 requires a log-concave pmf");
    double tail = f.tail_mass_bound;
    std::vector<BoundReport> out;
    double h_alpha = renyi_entropy(f, AlphaOrder::finite(alpha));
    double h_inf = renyi_entropy(f, AlphaOrder::infinity());
    double rhs = h_inf + std::log(alpha) / (alpha - 1.0);
    BoundReport r = make_report("eq7.4", h_alpha, rhs, bound_tol(h_alpha, rhs, tail));
    r.context["alpha"] = alpha;
    out.push_back(r);
    if (alpha == 2.0) {
        double collision = 0.0;
        for (double p : f.probs) collision += p * p;
        double M = m_functional(f);
        BoundReport r5 = make_report("eq7.5", M, 2.0 * collision, bound_tol(M, 2.0 * collision, tail));
        out.push_back(r5);
    }
    return out;
}

// eq8.4 lower (unconditional) and the Prop 8.3 upper bounds; at lambda = 0
// these coincide with the Theorem 1.1 reports.
inline std::vector<BoundReport> check_concentration_bounds(const Pmf& f, std::int64_t lambda) {
    double var = variance(f);
    double Q = concentration(f, lambda);
    double tail = f.tail_mass_bound;
    double lam = static_cast<double>(lambda);
    std::vector<BoundReport> out;
    {
        double lhs = detail::conc_lower(lam, var);
        BoundReport r = make_report("eq8.4-lower", lhs, Q, bound_tol(lhs, Q, tail));
        r.context["lambda"] = lam;
        r.context["Var"] = var;
        out.push_back(r);
    }
    if (is_log_concave(f)) {
        double rhs = detail::conc_upper(lam, var);
        BoundReport r = make_report("prop8.3-upper", Q, rhs, bound_tol(Q, rhs, tail));
        r.context["lambda"] = lam;
        r.context["Var"] = var;
        out.push_back(r);
        if (is_symmetric(f)) {
            double rhs_s = detail::conc_upper_sym(lam, var);
            BoundReport rs = make_report("prop8.3-upper-sym", Q, rhs_s, bound_tol(Q, rhs_s, tail));
            rs.context["lambda"] = lam;
            rs.context["Var"] = var;
            out.push_back(rs);
        }
    }
    return out;
}

// Theorem 1.2 (eq1.10) with the per-summand scaffolds eq9.2 / eq9.3.
// alpha may be +inf (symmetric case, constants 6 and 1/6).
inline std::vector<BoundReport> check_thm_1_2(const std::vector<Pmf>& summands, double alpha) {
    if (summands.empty()) throw std::invalid_argument("need at least one summand");
    if (!(alpha > 1.0)) throw std::invalid_argument("theorem 1.2 needs alpha > 1");
    bool all_symmetric = true;
    double tail = 0.0;
    for (const Pmf& f : summands) {
        if (!is_log_concave(f)) throw std::invalid_argument("theorem 1.2 requires log-concave summands");
        all_symmetric = all_symmetric && is_symmetric(f);
        tail += f.tail_mass_bound;
    }
    double c;
    if (all_symmetric)
        c = std::isinf(alpha) ? 6.0 : 2.0 * (3.0 * alpha - 1.0) / (alpha - 1.0);
    else if (alpha > 2.0)
        throw std::invalid_argument("non-symmetric summands need 1 < alpha <= 2");
    else
        c = (3.0 * alpha - 1.0) / (alpha - 1.0);
    AlphaOrder order = detail::order_from_real(alpha);

    Pmf conv = summands[0];
    for (std::size_t i = 1; i < summands.size(); ++i) conv = convolve(conv, summands[i]);
    double d_sum = delta(conv, order);
    double d_total = 0.0;
    for (const Pmf& f : summands) d_total += delta(f, order);

    std::vector<BoundReport> out;
    {
        double lhs = d_total / c;
        BoundReport r = make_report("eq1.10-lower", lhs, d_sum, bound_tol(lhs, d_sum, tail));
        r.context["alpha"] = alpha;
        r.context["c_alpha"] = c;
        out.push_back(r);
    }
    {
        double rhs = c * d_total;
        BoundReport r = make_report("eq1.10-upper", d_sum, rhs, bound_tol(d_sum, rhs, tail));
        r.context["alpha"] = alpha;
        r.context["c_alpha"] = c;
        out.push_back(r);
    }
    double upper_factor = std::isinf(alpha) ? 12.0 : 4.0 * (3.0 * alpha - 1.0) / (alpha - 1.0);
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const Pmf& f = summands[i];
        double var = variance(f);
        double d = delta(f, order);
        std::string k = "-k" + std::to_string(i);
        if (is_symmetric(f)) {
            double lhs = 2.0 * var;
            BoundReport r = make_report("eq9.2-lower" + k, lhs, d, bound_tol(lhs, d, f.tail_mass_bound));
            out.push_back(r);
        }
        {
            double rhs = upper_factor * var;
            BoundReport r = make_report("eq9.2-upper" + k, d, rhs, bound_tol(d, rhs, f.tail_mass_bound));
            out.push_back(r);
        }
        if (alpha <= 2.0) {
            double lhs = 4.0 * var;
            BoundReport r = make_report("eq9.3" + k, lhs, d, bound_tol(lhs, d, f.tail_mass_bound));
            out.push_back(r);
        }
    }
    return out;
}

// Theorem 1.3 (eq1.11 with the variance floor sigma2, eq1.12 unconditional)
// plus the per-summand scaffolds eq9.4 / eq9.5.
inline std::vector<BoundReport> check_thm_1_3(const std::vector<Pmf>& summands, const AlphaOrder& order,
                                              double sigma2) {
    if (summands.empty()) throw std::invalid_argument("need at least one summand");
    if (order.is_finite() && order.value() < 1.0)
        throw std::invalid_argument("theorem 1.3 needs alpha >= 1");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
    double tail = 0.0;
    for (const Pmf& f : summands) {
        if (!is_log_concave(f)) throw std::invalid_argument("theorem 1.3 requires log-concave summands");
        if (variance(f) < sigma2) throw std::invalid_argument("summand variance below sigma2");
        tail += f.tail_mass_bound;
    }
    const double pi_e = kTwoPiE / 2.0;
    double c_sigma = kTwoPiE * (1.0 + 1.0 / (12.0 * sigma2));
    double n = static_cast<double>(summands.size());

    Pmf conv = summands[0];
    for (std::size_t i = 1; i < summands.size(); ++i) conv = convolve(conv, summands[i]);
    double n_sum = entropy_power(conv, order);
    double n_total = 0.0;
    for (const Pmf& f : summands) n_total += entropy_power(f, order);

    std::vector<BoundReport> out;
    {
        double lhs = n_total / c_sigma;
        BoundReport r = make_report("eq1.11", lhs, n_sum, bound_tol(lhs, n_sum, tail));
        r.context["alpha"] = order.numeric();
        r.context["sigma2"] = sigma2;
        out.push_back(r);
    }
    {
        double rhs = -pi_e / 6.0 * (3.0 * n - 1.0) + kTwoPiE * n_total;
        BoundReport r = make_report("eq1.12", n_sum, rhs, bound_tol(n_sum, rhs, tail));
        r.context["alpha"] = order.numeric();
        out.push_back(r);
    }
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const Pmf& f = summands[i];
        double var = variance(f);
        std::string k = "-k" + std::to_string(i);
        double n_inf = entropy_power(f, AlphaOrder::infinity());
        {
            double lhs = 0.25 + var;
            BoundReport r = make_report("eq9.4" + k, lhs, n_inf, bound_tol(lhs, n_inf, f.tail_mass_bound));
            out.push_back(r);
        }
        double n_a = entropy_power(f, order);
        {
            BoundReport r = make_report("eq9.5-lower" + k, var, n_a, bound_tol(var, n_a, f.tail_mass_bound));
            out.push_back(r);
        }
        {
            double rhs = kTwoPiE * (1.0 + 1.0 / (12.0 * sigma2)) * var;
            BoundReport r = make_report("eq9.5-upper" + k, n_a, rhs, bound_tol(n_a, rhs, f.tail_mass_bound));
            out.push_back(r);
        }
    }
    return out;
}

// Discrete collision-entropy remark: N_2(X) >= 1 + 4 Var(X) for log-concave X.
inline BoundReport check_collision_remark(const Pmf& f) {
    if (!is_log_concave(f)) throw std::invalid_argument("collision remark requires a log-concave pmf");
    double var = variance(f);
    double n2 = entropy_power(f, AlphaOrder::finite(2.0));
    double lhs = 1.0 + 4.0 * var;
    BoundReport r = make_report("sec9-collision", lhs, n2, bound_tol(lhs, n2, f.tail_mass_bound));
    r.context["Var"] = var;
    return r;
}

}  // namespace dlc
