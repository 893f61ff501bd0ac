#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace lorentz {

// Nonnegative extended real used for time separations: a finite double or
// +infinity. Infinity absorbs addition and dominates every comparison, so
// min/>= chains stay well defined without IEEE NaN traps.
class ExtReal {
public:
    ExtReal() = default;
    ExtReal(double v) : value_(v) {
        if (std::isnan(v)) throw std::invalid_argument("ExtReal: NaN is not a value");
        if (std::isinf(v)) {
            infinite_ = true;
            value_ = 0.0;
        }
    }

    static ExtReal infinity() {
        ExtReal r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    // Finite value; throws on infinity.
    double value() const {
        if (infinite_) throw std::domain_error("ExtReal: value() called on infinity");
        return value_;
    }

    // IEEE view: infinity maps to +inf.
    double as_double() const {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtReal(a.value_ + b.value_);
    }
    // inf - finite = inf; finite operands subtract as usual.
    friend ExtReal operator-(ExtReal a, double b) {
        if (a.infinite_) return infinity();
        return ExtReal(a.value_ - b);
    }

    friend bool operator==(ExtReal a, ExtReal b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator<(ExtReal a, ExtReal b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(ExtReal a, ExtReal b) { return b < a; }
    friend bool operator<=(ExtReal a, ExtReal b) { return !(b < a); }
    friend bool operator>=(ExtReal a, ExtReal b) { return !(a < b); }

    friend ExtReal min(ExtReal a, ExtReal b) { return a < b ? a : b; }
    friend ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

inline std::string to_string(ExtReal x) {
    if (x.is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", x.value());
    return buf;
}

}  // namespace lorentz
