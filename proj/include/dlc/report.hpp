#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace dlc {

// One checked inequality "lhs <= rhs" with its slack and the tolerance used.
struct BoundReport {
    std::string bound_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool holds = false;  // slack >= -tolerance
    double tolerance = 0.0;
    std::map<std::string, double> context;
};

inline BoundReport make_report(std::string bound_id, double lhs, double rhs, double tolerance) {
    BoundReport r;
    r.bound_id = std::move(bound_id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.tolerance = tolerance;
    r.holds = r.slack >= -tolerance;
    return r;
}

inline std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string to_csv_row(const BoundReport& r) {
    std::string s = r.bound_id + "," + fmt_double(r.lhs) + "," + fmt_double(r.rhs) + "," +
                    fmt_double(r.slack) + "," + (r.holds ? "true" : "false") + "," + fmt_double(r.tolerance);
    for (const auto& [k, v] : r.context) s += "," + k + "=" + fmt_double(v);
    return s;
}

inline std::string csv_header() { return "bound_id,lhs,rhs,slack,holds,tolerance,context"; }

inline std::string to_structured_record(const BoundReport& r) {
    std::string s = "bound_id=" + r.bound_id + " lhs=" + fmt_double(r.lhs) + " rhs=" + fmt_double(r.rhs) +
                    " slack=" + fmt_double(r.slack) + " holds=" + (r.holds ? std::string("true") : std::string("false")) +
                    " tolerance=" + fmt_double(r.tolerance);
    for (const auto& [k, v] : r.context) s += " " + k + "=" + fmt_double(v);
    return s;
}

inline std::string to_text_row(const BoundReport& r) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-22s lhs=%-14.8g rhs=%-14.8g slack=%-14.6g %s", r.bound_id.c_str(),
                  r.lhs, r.rhs, r.slack, r.holds ? "PASS" : "FAIL");
    std::string s = buf;
    for (const auto& [k, v] : r.context) s += "  " + k + "=" + fmt_double(v);
    return s;
}

}  // namespace dlc
