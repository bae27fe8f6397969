#pragma once

#include <map>
#include <optional>

#include "flagpoly/poslead.hpp"
#include "flagpoly/vartable.hpp"

namespace flagpoly {

// Single Laurent term c * x^e (integer exponents). Coefficients of public
// monomials (decorations, SubFreeExpr leaves) are positive; the signed case
// only appears inside LaurentPoly.
struct LaurentMonomial {
    Rational coeff = 1;
    std::vector<int> exps;  // indexed against a VarTable

    LaurentMonomial() = default;
    LaurentMonomial(Rational c, std::vector<int> e) : coeff(std::move(c)), exps(std::move(e)) {}
    static LaurentMonomial one(int nvars) { return LaurentMonomial(1, std::vector<int>(nvars, 0)); }
    static LaurentMonomial var(int nvars, int idx, int exp = 1) {
        LaurentMonomial m = one(nvars);
        m.exps[idx] = exp;
        return m;
    }
    bool operator==(const LaurentMonomial& o) const { return coeff == o.coeff && exps == o.exps; }
};

LaurentMonomial mono_mul(const LaurentMonomial& a, const LaurentMonomial& b);
LaurentMonomial mono_div(const LaurentMonomial& a, const LaurentMonomial& b);

// Signed sparse multivariate Laurent polynomial over Rational. Terms are kept
// in a map ordered lexicographically by exponent vector, so the
// representation is canonical.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(VarTablePtr vt) : vt_(std::move(vt)) {}
    LaurentPoly(VarTablePtr vt, const Rational& c);
    LaurentPoly(VarTablePtr vt, const LaurentMonomial& m);

    static LaurentPoly zero(VarTablePtr vt) { return LaurentPoly(std::move(vt)); }
    static LaurentPoly one(VarTablePtr vt) { return LaurentPoly(vt, Rational(1)); }
    static LaurentPoly variable(VarTablePtr vt, int idx, int exp = 1);

    const VarTablePtr& vt() const { return vt_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool all_coeffs_positive() const;
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    LaurentMonomial as_monomial() const;  // throws unless is_monomial
    Rational constant_value() const;      // throws unless constant

    void add_term(const std::vector<int>& e, const Rational& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact division; nullopt when o does not divide *this.
    std::optional<LaurentPoly> divided_by(const LaurentPoly& o) const;

    // Multiplies by x^-min so that every variable has minimum exponent 0;
    // returns the extracted monomial shift.
    std::vector<int> normalize_shift();

    Rational leading_coeff() const;  // coefficient of the lex-largest term

    // Substitution-free evaluation; every variable must be assigned.
    Rational eval_rational(const std::vector<Rational>& assignment) const;
    // Only valid when all coefficients are positive (no cancellation).
    PosLead eval_poslead(const std::vector<PosLead>& assignment) const;

    std::string str() const;

private:
    VarTablePtr vt_;
    std::map<std::vector<int>, Rational> terms_;
};

// Monomial substitution: coordinate variable i of `p` is replaced by
// rules[i] (a monomial over `target`); parameter variables map index-wise.
LaurentPoly substitute_monomials(const LaurentPoly& p, const std::vector<LaurentMonomial>& rules,
                                 const VarTablePtr& target);

// Fraction num/den of Laurent polynomials with a light normal form:
// monomial denominators are folded into the numerator's exponents, exact
// divisions are simplified, and the denominator is made monic.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one(num_.vt())) {}
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc zero(VarTablePtr vt) { return RatFunc(LaurentPoly::zero(std::move(vt))); }
    static RatFunc one(VarTablePtr vt) { return RatFunc(LaurentPoly::one(std::move(vt))); }
    static RatFunc constant(VarTablePtr vt, const Rational& c) {
        return RatFunc(LaurentPoly(std::move(vt), c));
    }
    static RatFunc variable(VarTablePtr vt, int idx, int exp = 1) {
        return RatFunc(LaurentPoly::variable(std::move(vt), idx, exp));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const VarTablePtr& vt() const { return num_.vt(); }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;

    bool operator==(const RatFunc& o) const;  // cross-multiplied equality
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // num and den have positive coefficients only (after normalisation), so
    // the fraction is a subtraction-free expression.
    bool is_subtraction_free() const;

    Rational eval_rational(const std::vector<Rational>& assignment) const;

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

inline RatFunc substitute_monomials(const RatFunc& f, const std::vector<LaurentMonomial>& rules,
                                    const VarTablePtr& target) {
    return RatFunc(substitute_monomials(f.num(), rules, target),
                   substitute_monomials(f.den(), rules, target));
}

}  // namespace flagpoly
