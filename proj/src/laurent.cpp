#include "flagpoly/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace flagpoly {

LaurentMonomial mono_mul(const LaurentMonomial& a, const LaurentMonomial& b) {
    LaurentMonomial r(a.coeff * b.coeff, a.exps);
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

LaurentMonomial mono_div(const LaurentMonomial& a, const LaurentMonomial& b) {
    LaurentMonomial r(a.coeff / b.coeff, a.exps);
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] -= b.exps[i];
    return r;
}

LaurentPoly::LaurentPoly(VarTablePtr vt, const Rational& c) : vt_(std::move(vt)) {
    if (c != 0) terms_[std::vector<int>(vt_->size(), 0)] = c;
}

LaurentPoly::LaurentPoly(VarTablePtr vt, const LaurentMonomial& m) : vt_(std::move(vt)) {
    if (m.coeff != 0) terms_[m.exps] = m.coeff;
}

LaurentPoly LaurentPoly::variable(VarTablePtr vt, int idx, int exp) {
    LaurentPoly p(vt);
    std::vector<int> e(vt->size(), 0);
    e.at(idx) = exp;
    p.terms_[e] = 1;
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::all_coeffs_positive() const {
    for (auto& [e, c] : terms_)
        if (c <= 0) return false;
    return true;
}

LaurentMonomial LaurentPoly::as_monomial() const {
    if (!is_monomial()) throw std::domain_error("not a monomial: " + str());
    return LaurentMonomial(terms_.begin()->second, terms_.begin()->first);
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::domain_error("not a constant: " + str());
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const std::vector<int>& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vt_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(vt_ ? vt_ : o.vt_);
    std::vector<int> e(r.vt_ ? r.vt_->size() : 0, 0);
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

std::vector<int> LaurentPoly::normalize_shift() {
    if (terms_.empty() || !vt_) return {};
    std::vector<int> mins = terms_.begin()->first;
    for (auto& [e, c] : terms_)
        for (size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
    if (std::all_of(mins.begin(), mins.end(), [](int x) { return x == 0; })) return mins;
    std::map<std::vector<int>, Rational> shifted;
    for (auto& [e, c] : terms_) {
        std::vector<int> ne = e;
        for (size_t i = 0; i < ne.size(); ++i) ne[i] -= mins[i];
        shifted[ne] = c;
    }
    terms_ = std::move(shifted);
    return mins;
}

Rational LaurentPoly::leading_coeff() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second;
}

std::optional<LaurentPoly> LaurentPoly::divided_by(const LaurentPoly& o) const {
    if (o.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly::zero(vt_);
    // shift both to ordinary polynomials; the net monomial shift is restored
    // on the quotient afterwards
    LaurentPoly a = *this, b = o;
    std::vector<int> sa = a.normalize_shift();
    std::vector<int> sb = b.normalize_shift();
    LaurentPoly q(vt_);
    const auto& bt = *b.terms_.rbegin();  // lex-leading divisor term
    while (!a.terms_.empty()) {
        const auto& at = *a.terms_.rbegin();
        std::vector<int> e(at.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = at.first[i] - bt.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        Rational c = at.second / bt.second;
        q.add_term(e, c);
        // a -= c x^e * b
        for (auto& [eb, cb] : b.terms_) {
            std::vector<int> ne(e.size());
            for (size_t i = 0; i < ne.size(); ++i) ne[i] = e[i] + eb[i];
            a.add_term(ne, -c * cb);
        }
    }
    // restore shift sa - sb
    std::map<std::vector<int>, Rational> shifted;
    for (auto& [e, c] : q.terms_) {
        std::vector<int> ne = e;
        for (size_t i = 0; i < ne.size(); ++i) ne[i] += sa[i] - sb[i];
        shifted[ne] = c;
    }
    q.terms_ = std::move(shifted);
    return q;
}

Rational LaurentPoly::eval_rational(const std::vector<Rational>& assignment) const {
    Rational acc = 0;
    for (auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (assignment[i] == 0) throw std::domain_error("evaluation at zero");
            Rational base = assignment[i];
            int k = e[i];
            if (k < 0) {
                base = 1 / base;
                k = -k;
            }
            for (int s = 0; s < k; ++s) t *= base;
        }
        acc += t;
    }
    return acc;
}

PosLead LaurentPoly::eval_poslead(const std::vector<PosLead>& assignment) const {
    if (!all_coeffs_positive())
        throw std::domain_error("PosLead evaluation of a signed polynomial");
    if (terms_.empty()) throw std::domain_error("PosLead evaluation of zero");
    bool first = true;
    PosLead acc;
    for (auto& [e, c] : terms_) {
        PosLead t(0, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            t = pl_mul(t, PosLead(assignment[i].val * e[i],
                                  [&] {
                                      Rational b = 1;
                                      int k = e[i] < 0 ? -e[i] : e[i];
                                      for (int s = 0; s < k; ++s) b *= assignment[i].coeff;
                                      return e[i] < 0 ? 1 / b : b;
                                  }()));
        }
        acc = first ? t : pl_add(acc, t);
        first = false;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool havevar = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (c != 1 || !havevar) os << rat_str(c);
        bool needstar = (c != 1 || !havevar);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (needstar) os << "*";
            needstar = true;
            os << vt_->name(static_cast<int>(i));
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

LaurentPoly substitute_monomials(const LaurentPoly& p, const std::vector<LaurentMonomial>& rules,
                                 const VarTablePtr& target) {
    const VarTablePtr& src = p.vt();
    if (static_cast<int>(rules.size()) != src->n_coords())
        throw std::domain_error("substitution rules must cover all coordinate variables");
    if (src->n_params() > target->n_params())
        throw std::domain_error("target table lacks parameter variables");
    LaurentPoly out(target);
    for (auto& [e, c] : p.terms()) {
        LaurentMonomial m(c, std::vector<int>(target->size(), 0));
        for (int i = 0; i < src->size(); ++i) {
            if (e[i] == 0) continue;
            if (src->is_param(i)) {
                m.exps[target->n_coords() + (i - src->n_coords())] += e[i];
            } else {
                const LaurentMonomial& r = rules[i];
                Rational cc = 1;
                int k = e[i] < 0 ? -e[i] : e[i];
                for (int s = 0; s < k; ++s) cc *= r.coeff;
                m.coeff *= e[i] < 0 ? 1 / cc : cc;
                for (size_t t = 0; t < r.exps.size(); ++t) m.exps[t] += e[i] * r.exps[t];
            }
        }
        out.add_term(m.exps, m.coeff);
    }
    return out;
}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

bool RatFunc::den_is_one() const {
    if (!den_.is_monomial()) return false;
    LaurentMonomial m = den_.as_monomial();
    return m.coeff == 1 && std::all_of(m.exps.begin(), m.exps.end(), [](int e) { return e == 0; });
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one(num_.vt());
        return;
    }
    // fold monomial denominators into Laurent exponents
    if (den_.is_monomial()) {
        LaurentMonomial d = den_.as_monomial();
        LaurentPoly n(num_.vt());
        for (auto& [e, c] : num_.terms()) {
            std::vector<int> ne = e;
            for (size_t i = 0; i < ne.size(); ++i) ne[i] -= d.exps[i];
            n.add_term(ne, c / d.coeff);
        }
        num_ = std::move(n);
        den_ = LaurentPoly::one(num_.vt());
        return;
    }
    if (auto q = num_.divided_by(den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly::one(num_.vt());
        return;
    }
    // make the denominator's lex-leading coefficient 1 and align monomial
    // shifts so equal fractions get equal representations more often
    LaurentPoly d = den_;
    std::vector<int> sd = d.normalize_shift();
    Rational lc = d.leading_coeff();
    LaurentPoly n(num_.vt());
    for (auto& [e, c] : num_.terms()) {
        std::vector<int> ne = e;
        for (size_t i = 0; i < ne.size(); ++i) ne[i] -= sd[i];
        n.add_term(ne, c / lc);
    }
    LaurentPoly dd(num_.vt());
    for (auto& [e, c] : d.terms()) dd.add_term(e, c / lc);
    num_ = std::move(n);
    den_ = std::move(dd);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

bool RatFunc::operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

bool RatFunc::is_subtraction_free() const {
    return num_.all_coeffs_positive() && den_.all_coeffs_positive();
}

Rational RatFunc::eval_rational(const std::vector<Rational>& assignment) const {
    Rational d = den_.eval_rational(assignment);
    if (d == 0) throw std::domain_error("denominator vanishes at evaluation point");
    return num_.eval_rational(assignment) / d;
}

std::string RatFunc::str() const {
    if (den_is_one()) return num_.str();
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    std::string d = den_.term_count() > 1 ? "(" + den_.str() + ")" : den_.str();
    return n + " / " + d;
}

}  // namespace flagpoly
