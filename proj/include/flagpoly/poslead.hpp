#pragma once

#include "flagpoly/rational.hpp"

namespace flagpoly {

// Leading term of a generalised Puiseux series with positive leading
// coefficient: c * t^v with c > 0. Addition never cancels because all
// coefficients are positive, so (add, mul, div) are exact on leading terms.
// Subtraction is deliberately absent.
struct PosLead {
    Rational val = 0;    // valuation (exponent of the leading term)
    Rational coeff = 1;  // leading coefficient, strictly positive

    PosLead() = default;
    PosLead(Rational v, Rational c) : val(std::move(v)), coeff(std::move(c)) {
        if (coeff <= 0) throw std::domain_error("PosLead coefficient must be positive");
    }

    static PosLead one() { return PosLead(0, 1); }
    static PosLead from_rational(const Rational& c) { return PosLead(0, c); }

    bool operator==(const PosLead& o) const { return val == o.val && coeff == o.coeff; }
    bool operator!=(const PosLead& o) const { return !(*this == o); }
};

inline PosLead pl_add(const PosLead& a, const PosLead& b) {
    if (a.val < b.val) return a;
    if (b.val < a.val) return b;
    return PosLead(a.val, a.coeff + b.coeff);
}

inline PosLead pl_mul(const PosLead& a, const PosLead& b) {
    return PosLead(a.val + b.val, a.coeff * b.coeff);
}

inline PosLead pl_div(const PosLead& a, const PosLead& b) {
    return PosLead(a.val - b.val, a.coeff / b.coeff);
}

inline PosLead pl_inv(const PosLead& a) { return PosLead(-a.val, 1 / a.coeff); }

// Renders as "coeff@valuation", e.g. "1/2@3".
inline std::string pl_str(const PosLead& a) { return rat_str(a.coeff) + "@" + rat_str(a.val); }

inline PosLead parse_poslead(const std::string& s) {
    auto at = s.find('@');
    if (at == std::string::npos) throw ParseError("PosLead literal needs coeff@valuation: " + s);
    return PosLead(parse_rational(s.substr(at + 1)), parse_rational(s.substr(0, at)));
}

// PosLead together with a structural zero, the additive identity needed for
// matrix entries. Zero is absorbing for mul and neutral for add; there is
// still no subtraction.
struct PosLeadZ {
    bool is_zero = true;
    PosLead v;

    PosLeadZ() = default;
    PosLeadZ(const PosLead& x) : is_zero(false), v(x) {}

    static PosLeadZ zero() { return PosLeadZ(); }
    static PosLeadZ one() { return PosLeadZ(PosLead::one()); }

    bool operator==(const PosLeadZ& o) const {
        if (is_zero || o.is_zero) return is_zero == o.is_zero;
        return v == o.v;
    }
};

inline PosLeadZ plz_add(const PosLeadZ& a, const PosLeadZ& b) {
    if (a.is_zero) return b;
    if (b.is_zero) return a;
    return PosLeadZ(pl_add(a.v, b.v));
}

inline PosLeadZ plz_mul(const PosLeadZ& a, const PosLeadZ& b) {
    if (a.is_zero || b.is_zero) return PosLeadZ::zero();
    return PosLeadZ(pl_mul(a.v, b.v));
}

}  // namespace flagpoly
