#pragma once

#include "flagpoly/matrix.hpp"
#include "flagpoly/quiver.hpp"

namespace flagpoly {

// Element of Z = B_-^v cap B^v w0bar B^v with its chart factorisation cached:
// b = u1 * diag(d) * w0bar * u2, b lower triangular.
template <class R>
struct ZPoint {
    Matrix<R> b, u1, u2;
    std::vector<R> d;
};

struct StringChartResult {
    ZPoint<RatFunc> z;
    RatFunc w;        // superpotential chi(u1) + chi(u2)
    VarTablePtr vt;   // z_1..z_N, d_1..d_n
};

struct IdealChartResult {
    ZPoint<RatFunc> z;
    RatFunc w;        // via the LDU route
    VarTablePtr vt;   // m_1..m_N, d_1..d_n
};

// x_{-i_1}(z_1)...x_{-i_N}(z_N) over the chart variable table.
Matrix<RatFunc> x_minus_product(const ReducedWord& w, const VarTablePtr& vt);

// Twist eta^{w0,e}(u) = [(w0bar u^T)^{-1}]_+ .
Matrix<RatFunc> eta_twist(const Matrix<RatFunc>& u);

// iota(g) = (w0bar g^{-1} w0bar^{-1})^T .
Matrix<RatFunc> iota(const Matrix<RatFunc>& g);

// Completion Phi(d, u1) = u1 d w0bar u2 with u2 the unique element making the
// product lower triangular; throws NonGenericError off the chart.
ZPoint<RatFunc> phi_complete(const std::vector<RatFunc>& d, const Matrix<RatFunc>& u1);

// Full string chart for any reduced word (symbolic).
StringChartResult string_chart(const ReducedWord& w);

// Ideal chart psi_i: b = y_{i_1}(1/m'_1)...y_{i_N}(1/m'_N) * t_R(d, m'),
// with m' indexed by the word's slots. W is recovered by the LDU route.
IdealChartResult ideal_chart(const ReducedWord& w);

// Ideal chart over the leading-term field (exact numeric).
Matrix<PosLeadZ> ideal_chart_poslead(const ReducedWord& w, const std::vector<PosLead>& d,
                                     const std::vector<PosLead>& m);

// Universal weight matrix diagonal, entries listed in matrix order 1..n:
// entry n-j+1 equals d_j * prod_{l<j} m'_{alpha_lj} / prod_{l>=j} m'_{alpha_{j,l+1}}.
// Coordinates are given per positive root.
std::vector<LaurentMonomial> universal_weight_monomials(int n, const VarTablePtr& vt);
std::vector<PosLead> universal_weight_poslead(int n, const std::map<PositiveRoot, PosLead>& m,
                                              const std::vector<PosLead>& d);

// Monomial coordinate change between the i0 string and ideal charts:
// returns the exponent of z_t in m_k (forward) and of m_t in z_k (inverse).
struct MonomialMap {
    // rules[k] = exponent vector: coordinate k of the target in terms of the
    // source coordinates (pure monomials, coefficient 1)
    std::vector<std::vector<int>> rules;
};
MonomialMap string_to_ideal_i0(int n);  // m in terms of z
MonomialMap ideal_to_string_i0(int n);  // z in terms of m

// Value algebra used by the braid coordinate changes.
template <class T>
struct PosAlg;

template <>
struct PosAlg<PosLead> {
    static PosLead add(const PosLead& a, const PosLead& b) { return pl_add(a, b); }
    static PosLead mul(const PosLead& a, const PosLead& b) { return pl_mul(a, b); }
    static PosLead div(const PosLead& a, const PosLead& b) { return pl_div(a, b); }
};
template <>
struct PosAlg<RatFunc> {
    static RatFunc add(const RatFunc& a, const RatFunc& b) { return a + b; }
    static RatFunc mul(const RatFunc& a, const RatFunc& b) { return a * b; }
    static RatFunc div(const RatFunc& a, const RatFunc& b) { return a / b; }
};
template <>
struct PosAlg<Rational> {
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
};

// One braid move on slot-indexed ideal coordinates. Long move at position p
// rewrites slots (p, p+1, p+2) carrying roots (alpha, alpha+beta, beta) into
// (beta, alpha+beta, alpha) coordinates; commutations swap the two slots.
template <class T>
std::vector<T> braid_coordinate_change(const std::vector<T>& vals, const Move& mv) {
    std::vector<T> out = vals;
    int p = mv.pos - 1;
    if (mv.kind == Move::Commutation) {
        std::swap(out[p], out[p + 1]);
        return out;
    }
    const T& x = vals[p];      // m'_alpha
    const T& y = vals[p + 1];  // m'_{alpha+beta}
    const T& z = vals[p + 2];  // m'_beta
    T xz = PosAlg<T>::add(x, z);
    out[p] = PosAlg<T>::div(PosAlg<T>::mul(y, xz), x);      // m''_beta
    out[p + 1] = PosAlg<T>::div(PosAlg<T>::mul(x, z), xz);  // m''_{alpha+beta}
    out[p + 2] = PosAlg<T>::div(PosAlg<T>::mul(y, xz), z);  // m''_alpha
    return out;
}

// Transfers slot-indexed ideal coordinates from w1 to w2 along the braid path.
template <class T>
std::vector<T> chart_transfer(const std::vector<T>& vals, const ReducedWord& w1,
                              const ReducedWord& w2) {
    std::vector<T> cur = vals;
    for (const Move& mv : braid_path(w1, w2)) cur = braid_coordinate_change(cur, mv);
    return cur;
}

}  // namespace flagpoly
