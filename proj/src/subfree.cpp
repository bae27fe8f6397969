#include "flagpoly/subfree.hpp"

#include <algorithm>
#include <sstream>

namespace flagpoly {

SubFreeExpr SubFreeExpr::monomial(VarTablePtr vt, LaurentMonomial m) {
    if (m.coeff <= 0) throw std::domain_error("SubFreeExpr monomials need positive coefficients");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Monomial;
    n->vt = std::move(vt);
    n->mono = std::move(m);
    return SubFreeExpr(n);
}

SubFreeExpr SubFreeExpr::constant(VarTablePtr vt, const Rational& c) {
    return monomial(vt, LaurentMonomial(c, std::vector<int>(vt->size(), 0)));
}

SubFreeExpr SubFreeExpr::variable(VarTablePtr vt, const std::string& name, int exp) {
    int idx = vt->index(name);
    return monomial(vt, LaurentMonomial::var(vt->size(), idx, exp));
}

SubFreeExpr SubFreeExpr::sum(std::vector<SubFreeExpr> parts) {
    if (parts.empty()) throw std::domain_error("empty sum has no subtraction-free value");
    if (parts.size() == 1) return parts[0];
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->vt = parts[0].vt();
    n->kids = std::move(parts);
    return SubFreeExpr(n);
}

SubFreeExpr SubFreeExpr::product(std::vector<SubFreeExpr> parts) {
    if (parts.empty()) throw std::domain_error("empty product");
    if (parts.size() == 1) return parts[0];
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->vt = parts[0].vt();
    n->kids = std::move(parts);
    return SubFreeExpr(n);
}

SubFreeExpr SubFreeExpr::quotient(SubFreeExpr num, SubFreeExpr den) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Quotient;
    n->vt = num.vt();
    n->kids = {std::move(num), std::move(den)};
    return SubFreeExpr(n);
}

SubFreeExpr SubFreeExpr::from_poly(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial is not subtraction-free expressible");
    if (!p.all_coeffs_positive())
        throw std::domain_error("polynomial with negative coefficients: " + p.str());
    std::vector<SubFreeExpr> parts;
    for (auto& [e, c] : p.terms()) parts.push_back(monomial(p.vt(), LaurentMonomial(c, e)));
    return sum(std::move(parts));
}

SubFreeExpr SubFreeExpr::from_ratfunc(const RatFunc& f) {
    if (!f.is_subtraction_free())
        throw std::domain_error("fraction is not subtraction-free: " + f.str());
    if (f.den_is_one()) return from_poly(f.num());
    return quotient(from_poly(f.num()), from_poly(f.den()));
}

Rational SubFreeExpr::eval_rational(const std::vector<Rational>& assignment) const {
    switch (kind()) {
        case Kind::Monomial:
            return LaurentPoly(vt(), leaf()).eval_rational(assignment);
        case Kind::Sum: {
            Rational acc = 0;
            for (auto& k : children()) acc += k.eval_rational(assignment);
            return acc;
        }
        case Kind::Product: {
            Rational acc = 1;
            for (auto& k : children()) acc *= k.eval_rational(assignment);
            return acc;
        }
        case Kind::Quotient: {
            Rational d = children()[1].eval_rational(assignment);
            if (d == 0) throw std::domain_error("quotient denominator vanished");
            return children()[0].eval_rational(assignment) / d;
        }
    }
    throw std::logic_error("bad node");
}

PosLead SubFreeExpr::eval_poslead(const std::vector<PosLead>& assignment) const {
    switch (kind()) {
        case Kind::Monomial:
            return LaurentPoly(vt(), leaf()).eval_poslead(assignment);
        case Kind::Sum: {
            PosLead acc = children()[0].eval_poslead(assignment);
            for (size_t i = 1; i < children().size(); ++i)
                acc = pl_add(acc, children()[i].eval_poslead(assignment));
            return acc;
        }
        case Kind::Product: {
            PosLead acc = children()[0].eval_poslead(assignment);
            for (size_t i = 1; i < children().size(); ++i)
                acc = pl_mul(acc, children()[i].eval_poslead(assignment));
            return acc;
        }
        case Kind::Quotient:
            return pl_div(children()[0].eval_poslead(assignment),
                          children()[1].eval_poslead(assignment));
    }
    throw std::logic_error("bad node");
}

SubFreeExpr SubFreeExpr::substitute(const std::map<int, SubFreeExpr>& rules) const {
    switch (kind()) {
        case Kind::Monomial: {
            const auto& m = leaf();
            std::vector<SubFreeExpr> parts;
            LaurentMonomial rest(m.coeff, std::vector<int>(m.exps.size(), 0));
            const VarTablePtr* target_vt = nullptr;
            for (auto& [idx, rep] : rules) target_vt = &rep.vt();
            for (size_t i = 0; i < m.exps.size(); ++i) {
                if (m.exps[i] == 0) continue;
                auto it = rules.find(static_cast<int>(i));
                if (it == rules.end()) {
                    rest.exps[i] = m.exps[i];
                    continue;
                }
                const SubFreeExpr& rep = it->second;
                int k = m.exps[i];
                SubFreeExpr pos = rep;
                if (k < 0) pos = quotient(constant(rep.vt(), 1), rep);
                for (int s = 0; s < std::abs(k); ++s) parts.push_back(pos);
            }
            VarTablePtr ovt = target_vt ? *target_vt : vt();
            // the untouched part keeps its exponents; when variable tables
            // differ the untouched exponents must all be zero
            bool resttrivial = std::all_of(rest.exps.begin(), rest.exps.end(),
                                           [](int e) { return e == 0; });
            if (!resttrivial && !(*ovt == *vt()))
                throw std::domain_error("substitution must cover all variables when retargeting");
            if (resttrivial)
                parts.push_back(constant(ovt, rest.coeff));
            else
                parts.push_back(monomial(vt(), rest));
            return product(std::move(parts));
        }
        case Kind::Sum: {
            std::vector<SubFreeExpr> kids;
            for (auto& k : children()) kids.push_back(k.substitute(rules));
            return sum(std::move(kids));
        }
        case Kind::Product: {
            std::vector<SubFreeExpr> kids;
            for (auto& k : children()) kids.push_back(k.substitute(rules));
            return product(std::move(kids));
        }
        case Kind::Quotient:
            return quotient(children()[0].substitute(rules), children()[1].substitute(rules));
    }
    throw std::logic_error("bad node");
}

RatFunc SubFreeExpr::canonical() const {
    switch (kind()) {
        case Kind::Monomial:
            return RatFunc(LaurentPoly(vt(), leaf()));
        case Kind::Sum: {
            RatFunc acc = children()[0].canonical();
            for (size_t i = 1; i < children().size(); ++i) acc = acc + children()[i].canonical();
            return acc;
        }
        case Kind::Product: {
            RatFunc acc = children()[0].canonical();
            for (size_t i = 1; i < children().size(); ++i) acc = acc * children()[i].canonical();
            return acc;
        }
        case Kind::Quotient:
            return children()[0].canonical() / children()[1].canonical();
    }
    throw std::logic_error("bad node");
}

std::string SubFreeExpr::str() const { return canonical().str(); }

PLForm PLForm::affine(Affine a) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Affine;
    n->aff = std::move(a);
    return PLForm(n);
}

PLForm PLForm::min(std::vector<PLForm> parts) {
    std::vector<PLForm> flat;
    for (auto& p : parts) {
        if (p.kind() == Kind::Min)
            for (auto& k : p.children()) flat.push_back(k);
        else
            flat.push_back(p);
    }
    if (flat.size() == 1) return flat[0];
    auto n = std::make_shared<Node>();
    n->kind = Kind::Min;
    n->kids = std::move(flat);
    return PLForm(n);
}

PLForm PLForm::plus(std::vector<PLForm> parts) {
    if (parts.size() == 1) return parts[0];
    bool allaff = std::all_of(parts.begin(), parts.end(),
                              [](const PLForm& p) { return p.kind() == Kind::Affine; });
    if (allaff) {
        Affine acc = parts[0].affine_data();
        for (size_t i = 1; i < parts.size(); ++i) {
            const Affine& a = parts[i].affine_data();
            acc.cst += a.cst;
            for (size_t k = 0; k < acc.coeffs.size(); ++k) acc.coeffs[k] += a.coeffs[k];
        }
        return affine(std::move(acc));
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Plus;
    n->kids = std::move(parts);
    return PLForm(n);
}

PLForm PLForm::minus(PLForm a, PLForm b) {
    if (a.kind() == Kind::Affine && b.kind() == Kind::Affine) {
        Affine acc = a.affine_data();
        const Affine& o = b.affine_data();
        acc.cst -= o.cst;
        for (size_t k = 0; k < acc.coeffs.size(); ++k) acc.coeffs[k] -= o.coeffs[k];
        return affine(std::move(acc));
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Minus;
    n->kids = {std::move(a), std::move(b)};
    return PLForm(n);
}

Rational PLForm::eval(const std::vector<Rational>& point) const {
    switch (kind()) {
        case Kind::Affine: {
            Rational acc = node_->aff.cst;
            for (size_t i = 0; i < node_->aff.coeffs.size(); ++i)
                acc += node_->aff.coeffs[i] * point[i];
            return acc;
        }
        case Kind::Min: {
            Rational m = node_->kids[0].eval(point);
            for (size_t i = 1; i < node_->kids.size(); ++i) {
                Rational v = node_->kids[i].eval(point);
                if (v < m) m = v;
            }
            return m;
        }
        case Kind::Plus: {
            Rational acc = 0;
            for (auto& k : node_->kids) acc += k.eval(point);
            return acc;
        }
        case Kind::Minus:
            return node_->kids[0].eval(point) - node_->kids[1].eval(point);
    }
    throw std::logic_error("bad node");
}

std::optional<std::vector<PLForm::Affine>> PLForm::min_of_affines() const {
    if (kind() == Kind::Affine) return std::vector<Affine>{node_->aff};
    if (kind() != Kind::Min) return std::nullopt;
    std::vector<Affine> out;
    for (auto& k : node_->kids) {
        if (k.kind() != Kind::Affine) return std::nullopt;
        out.push_back(k.affine_data());
    }
    return out;
}

PLForm::Affine tropicalize_monomial(const VarTablePtr& vt, const LaurentMonomial& m,
                                    const DominantWeight& lambda) {
    PLForm::Affine a;
    a.coeffs.assign(vt->n_coords(), 0);
    a.cst = 0;  // Val of a positive rational constant is 0
    for (int i = 0; i < vt->size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (vt->is_param(i)) {
            int j = i - vt->n_coords();
            if (j >= lambda.n()) throw std::domain_error("parameter variable out of lambda range");
            a.cst += Rational(m.exps[i]) * lambda.comps[j];
        } else {
            a.coeffs[i] += m.exps[i];
        }
    }
    return a;
}

PLForm tropicalize(const SubFreeExpr& e, const DominantWeight& lambda) {
    switch (e.kind()) {
        case SubFreeExpr::Kind::Monomial:
            return PLForm::affine(tropicalize_monomial(e.vt(), e.leaf(), lambda));
        case SubFreeExpr::Kind::Sum: {
            std::vector<PLForm> kids;
            for (auto& k : e.children()) kids.push_back(tropicalize(k, lambda));
            return PLForm::min(std::move(kids));
        }
        case SubFreeExpr::Kind::Product: {
            std::vector<PLForm> kids;
            for (auto& k : e.children()) kids.push_back(tropicalize(k, lambda));
            return PLForm::plus(std::move(kids));
        }
        case SubFreeExpr::Kind::Quotient:
            return PLForm::minus(tropicalize(e.children()[0], lambda),
                                 tropicalize(e.children()[1], lambda));
    }
    throw std::logic_error("bad node");
}

}  // namespace flagpoly
