#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dlc {

// Renyi order: finite alpha in (0,inf) \ {1}, the Shannon limit, or min-entropy.
// Finite orders within 1e-9 of 1 are rejected; the Shannon case must be
// constructed explicitly so the 1/(alpha-1) factor never blows up.
class AlphaOrder {
public:
    enum class Kind { finite, shannon, infinity };

    static AlphaOrder finite(double alpha) {
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
        if (std::abs(alpha - 1.0) < 1e-9)
            throw std::invalid_argument("alpha too close to 1; use AlphaOrder::shannon()");
        AlphaOrder a;
        a.kind_ = Kind::finite;
        a.alpha_ = alpha;
        return a;
    }
    static AlphaOrder shannon() {
        AlphaOrder a;
        a.kind_ = Kind::shannon;
        return a;
    }
    static AlphaOrder infinity() {
        AlphaOrder a;
        a.kind_ = Kind::infinity;
        return a;
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_shannon() const { return kind_ == Kind::shannon; }
    bool is_infinity() const { return kind_ == Kind::infinity; }

    double value() const {
        if (kind_ != Kind::finite) throw std::logic_error("value() on non-finite order");
        return alpha_;
    }

    // Numeric alpha with the conventions 1 for Shannon and +inf for min-entropy.
    double numeric() const {
        switch (kind_) {
            case Kind::finite: return alpha_;
            case Kind::shannon: return 1.0;
            case Kind::infinity: return std::numeric_limits<double>::infinity();
        }
        return 0.0;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::finite: return std::to_string(alpha_);
            case Kind::shannon: return "1";
            case Kind::infinity: return "inf";
        }
        return "?";
    }

private:
    Kind kind_ = Kind::shannon;
    double alpha_ = 1.0;
};

}  // namespace dlc
