#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlc/pmf.hpp"

namespace dlc {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<double> parse_number_list(const std::string& s) {
    std::string cleaned = s;
    for (char& c : cleaned)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(cleaned);
    std::vector<double> out;
    double x;
    while (in >> x) out.push_back(x);
    return out;
}

}  // namespace detail

// Flat key/value distribution description with a "family" discriminator.
// One "key = value" pair per line (or per ';'-separated field); '#' comments.
// Fields: family; n; p; lambda; p_list (numbers); offset; probs (numbers).
inline DistributionSpec parse_distribution_spec(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    std::istringstream stream(text);
    while (std::getline(stream, line)) {
        ++lineno;
        // allow ';' as an inline separator
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ';')) {
            std::size_t hash = field.find('#');
            if (hash != std::string::npos) field = field.substr(0, hash);
            field = detail::trim(field);
            if (field.empty()) continue;
            std::size_t eq = field.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
            std::string key = detail::trim(field.substr(0, eq));
            std::string value = detail::trim(field.substr(eq + 1));
            if (key.empty() || value.empty())
                throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key or value");
            kv[key] = value;
        }
    }
    auto it = kv.find("family");
    if (it == kv.end()) throw std::invalid_argument("missing required field: family");

    DistributionSpec spec;
    const std::string& fam = it->second;
    auto need = [&](const std::string& key) -> const std::string& {
        auto f = kv.find(key);
        if (f == kv.end()) throw std::invalid_argument("family " + fam + " requires field: " + key);
        return f->second;
    };
    auto as_double = [&](const std::string& key) { return std::stod(need(key)); };
    auto as_int = [&](const std::string& key) { return static_cast<std::int64_t>(std::stoll(need(key))); };

    if (fam == "explicit") {
        spec.family = Family::explicit_pmf;
        spec.offset = kv.count("offset") ? static_cast<std::int64_t>(std::stoll(kv["offset"])) : 0;
        spec.probs = detail::parse_number_list(need("probs"));
        if (spec.probs.empty()) throw std::invalid_argument("explicit family needs non-empty probs");
    } else if (fam == "discrete_uniform") {
        spec.family = Family::discrete_uniform;
        spec.n = as_int("n");
    } else if (fam == "bernoulli") {
        spec.family = Family::bernoulli;
        spec.p = as_double("p");
    } else if (fam == "binomial") {
        spec.family = Family::binomial;
        spec.n = as_int("n");
        spec.p = as_double("p");
    } else if (fam == "poisson") {
        spec.family = Family::poisson;
        spec.lambda = as_double("lambda");
    } else if (fam == "geometric_one_sided") {
        spec.family = Family::geometric_one_sided;
        spec.p = as_double("p");
    } else if (fam == "geometric_two_sided") {
        spec.family = Family::geometric_two_sided;
        spec.p = as_double("p");
    } else if (fam == "poisson_binomial") {
        spec.family = Family::poisson_binomial;
        spec.p_list = detail::parse_number_list(need("p_list"));
        if (spec.p_list.empty()) throw std::invalid_argument("poisson_binomial needs non-empty p_list");
    } else {
        throw std::invalid_argument("unknown family: " + fam);
    }
    return spec;
}

inline DistributionSpec load_distribution_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_distribution_spec(buf.str());
}

}  // namespace dlc
