#pragma once

#include <memory>

#include "flagpoly/laurent.hpp"
#include "flagpoly/reduced_word.hpp"

namespace flagpoly {

// Subtraction-free expression: a tree with positive Laurent monomial leaves
// and sum / product / quotient nodes. Closed under evaluation over any
// positive semifield (Rational>0, PosLead).
class SubFreeExpr {
public:
    enum class Kind { Monomial, Sum, Product, Quotient };

    static SubFreeExpr monomial(VarTablePtr vt, LaurentMonomial m);
    static SubFreeExpr constant(VarTablePtr vt, const Rational& c);
    static SubFreeExpr variable(VarTablePtr vt, const std::string& name, int exp = 1);
    static SubFreeExpr sum(std::vector<SubFreeExpr> parts);
    static SubFreeExpr product(std::vector<SubFreeExpr> parts);
    static SubFreeExpr quotient(SubFreeExpr num, SubFreeExpr den);

    // sum of monomials of a positive Laurent polynomial
    static SubFreeExpr from_poly(const LaurentPoly& p);
    // num/den of a subtraction-free fraction
    static SubFreeExpr from_ratfunc(const RatFunc& f);

    Kind kind() const { return node_->kind; }
    const VarTablePtr& vt() const { return node_->vt; }
    const LaurentMonomial& leaf() const { return node_->mono; }
    const std::vector<SubFreeExpr>& children() const { return node_->kids; }

    Rational eval_rational(const std::vector<Rational>& assignment) const;
    PosLead eval_poslead(const std::vector<PosLead>& assignment) const;

    // capture-free substitution; rules map variable index -> replacement
    SubFreeExpr substitute(const std::map<int, SubFreeExpr>& rules) const;

    // canonical fraction of positive Laurent polynomials
    RatFunc canonical() const;
    // structural equality after canonicalisation
    bool equivalent(const SubFreeExpr& o) const { return canonical() == o.canonical(); }

    std::string str() const;  // deterministic text form

private:
    struct Node {
        Kind kind;
        VarTablePtr vt;
        LaurentMonomial mono;           // Kind::Monomial
        std::vector<SubFreeExpr> kids;  // other kinds
    };
    std::shared_ptr<const Node> node_;
    explicit SubFreeExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

// Piecewise-linear form: an affine function of the tropical coordinates or a
// min / sum / difference of such. Differences only arise from quotients.
class PLForm {
public:
    enum class Kind { Affine, Min, Plus, Minus };

    struct Affine {
        std::vector<Rational> coeffs;  // over coordinate variables
        Rational cst;                  // lambda-dependent constant, already substituted
    };

    static PLForm affine(Affine a);
    static PLForm min(std::vector<PLForm> parts);
    static PLForm plus(std::vector<PLForm> parts);
    static PLForm minus(PLForm a, PLForm b);

    Kind kind() const { return node_->kind; }
    const Affine& affine_data() const { return node_->aff; }
    const std::vector<PLForm>& children() const { return node_->kids; }

    Rational eval(const std::vector<Rational>& point) const;

    // Collects the affine pieces when the form is min of affines (after
    // flattening plus over affines); nullopt when a genuine Minus node or
    // nested min prevents the H-representation reading.
    std::optional<std::vector<Affine>> min_of_affines() const;

private:
    struct Node {
        Kind kind;
        Affine aff;
        std::vector<PLForm> kids;
    };
    std::shared_ptr<const Node> node_;
    explicit PLForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

// Tropicalisation of a subtraction-free expression at highest weight lambda:
// sums become min, products become sums of affine forms, quotients become
// differences; parameter variables d_j contribute lambda_j, positive rational
// coefficients contribute valuation 0.
PLForm tropicalize(const SubFreeExpr& e, const DominantWeight& lambda);

// Affine form of a single positive monomial under d = t^lambda.
PLForm::Affine tropicalize_monomial(const VarTablePtr& vt, const LaurentMonomial& m,
                                    const DominantWeight& lambda);

}  // namespace flagpoly
