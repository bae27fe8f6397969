#pragma once

#include "flagpoly/rational.hpp"

namespace flagpoly {

// Element of the min-plus semiring: a rational value or +infinity.
// Infinity is the identity of min and absorbing for plus.
struct TropNum {
    bool infinite = false;
    Rational value = 0;

    static TropNum inf() { return TropNum{true, 0}; }
    static TropNum of(Rational v) { return TropNum{false, std::move(v)}; }

    bool operator==(const TropNum& o) const {
        if (infinite || o.infinite) return infinite == o.infinite;
        return value == o.value;
    }
};

inline TropNum trop_min(const TropNum& a, const TropNum& b) {
    if (a.infinite) return b;
    if (b.infinite) return a;
    return TropNum::of(a.value < b.value ? a.value : b.value);
}

inline TropNum trop_plus(const TropNum& a, const TropNum& b) {
    if (a.infinite || b.infinite) return TropNum::inf();
    return TropNum::of(a.value + b.value);
}

inline std::string trop_str(const TropNum& t) { return t.infinite ? "inf" : rat_str(t.value); }

inline TropNum parse_trop(const std::string& s) {
    if (s == "inf") return TropNum::inf();
    return TropNum::of(parse_rational(s));
}

}  // namespace flagpoly
