#include "flagpoly/charts.hpp"

namespace flagpoly {

Matrix<RatFunc> x_minus_product(const ReducedWord& w, const VarTablePtr& vt) {
    RatFunc one = RatFunc::one(vt);
    Matrix<RatFunc> u = Matrix<RatFunc>::identity(w.n, one);
    for (int k = 0; k < w.length(); ++k)
        u = u * chevalley(Chevalley::XMinus, w.n, w.letters[k], RatFunc::variable(vt, k));
    return u;
}

Matrix<RatFunc> eta_twist(const Matrix<RatFunc>& u) {
    const int n = u.n();
    const RatFunc one = RingOps<RatFunc>::one(u.at(0, 0));
    Matrix<RatFunc> w0 = chevalley(Chevalley::W0Bar, n, 1, one);
    Matrix<RatFunc> m = inverse(w0 * u.transpose());
    return gauss_ldu(m).u;
}

Matrix<RatFunc> iota(const Matrix<RatFunc>& g) {
    const RatFunc one = RingOps<RatFunc>::one(g.at(0, 0));
    Matrix<RatFunc> w0 = chevalley(Chevalley::W0Bar, g.n(), 1, one);
    return (w0 * inverse(g) * inverse(w0)).transpose();
}

ZPoint<RatFunc> phi_complete(const std::vector<RatFunc>& d, const Matrix<RatFunc>& u1) {
    const int n = u1.n();
    const RatFunc one = RingOps<RatFunc>::one(u1.at(0, 0));
    const RatFunc zero = RingOps<RatFunc>::zero(u1.at(0, 0));
    Matrix<RatFunc> dd(n, zero);
    for (int i = 0; i < n; ++i) dd.at(i, i) = d[i];
    Matrix<RatFunc> w0 = chevalley(Chevalley::W0Bar, n, 1, one);
    Matrix<RatFunc> a = u1 * dd * w0;
    LDU<RatFunc> f = gauss_ldu(a);  // throws NonGenericError off the chart
    ZPoint<RatFunc> z;
    z.u1 = u1;
    z.u2 = inverse(f.u);
    z.b = f.l * f.d;
    z.d = d;
    return z;
}

namespace {

RatFunc chi(const Matrix<RatFunc>& u) {
    RatFunc acc = RingOps<RatFunc>::zero(u.at(0, 0));
    for (int i = 0; i + 1 < u.n(); ++i) acc = acc + u.at(i, i + 1);
    return acc;
}

}  // namespace

StringChartResult string_chart(const ReducedWord& w) {
    const int N = w.length();
    StringChartResult res;
    res.vt = VarTable::coords_and_params("z", N, w.n);
    std::vector<RatFunc> d;
    for (int j = 0; j < w.n; ++j) d.push_back(RatFunc::variable(res.vt, N + j));
    Matrix<RatFunc> u = x_minus_product(w, res.vt);
    Matrix<RatFunc> u1 = iota(eta_twist(u));
    res.z = phi_complete(d, u1);
    res.w = chi(res.z.u1) + chi(res.z.u2);
    return res;
}

IdealChartResult ideal_chart(const ReducedWord& w) {
    const int n = w.n;
    const int N = w.length();
    IdealChartResult res;
    res.vt = VarTable::coords_and_params("m", N, n);
    const RatFunc one = RatFunc::one(res.vt);
    const RatFunc zero = RatFunc::zero(res.vt);

    // y-product with parameters 1/m'_k in word order
    Matrix<RatFunc> y = Matrix<RatFunc>::identity(n, one);
    for (int k = 0; k < N; ++k)
        y = y * chevalley(Chevalley::Y, n, w.letters[k],
                          one / RatFunc::variable(res.vt, k));

    // universal weight matrix: coordinates are indexed by positive roots via
    // the word's root order
    auto roots = positive_root_sequence(w);
    std::map<PositiveRoot, int> slot;
    for (int k = 0; k < N; ++k) slot[roots[k]] = k;
    Matrix<RatFunc> tr(n, zero);
    for (int j = 1; j <= n; ++j) {
        RatFunc e = RatFunc::variable(res.vt, N + j - 1);
        for (int l = 1; l < j; ++l) e = e * RatFunc::variable(res.vt, slot.at({l, j}));
        for (int l = j; l <= n - 1; ++l) e = e / RatFunc::variable(res.vt, slot.at({j, l + 1}));
        tr.at(n - j, n - j) = e;
    }
    Matrix<RatFunc> b = y * tr;

    // recover u1 d w0bar u2 by LDU of w0bar^{-1} b
    Matrix<RatFunc> w0 = chevalley(Chevalley::W0Bar, n, 1, one);
    LDU<RatFunc> f = gauss_ldu(inverse(w0) * b);
    res.z.b = b;
    res.z.u1 = w0 * f.l * inverse(w0);
    res.z.u2 = f.u;
    res.z.d.resize(n, zero);
    Matrix<RatFunc> dmat = w0 * f.d * inverse(w0);
    for (int i = 0; i < n; ++i) res.z.d[i] = dmat.at(i, i);
    if (!res.z.u1.is_upper_unitriangular())
        throw NonGenericError("ideal chart completion failed to produce unipotent u1");
    res.w = chi(res.z.u1) + chi(res.z.u2);
    return res;
}

Matrix<PosLeadZ> ideal_chart_poslead(const ReducedWord& w, const std::vector<PosLead>& d,
                                     const std::vector<PosLead>& m) {
    const int n = w.n;
    Matrix<PosLeadZ> b = Matrix<PosLeadZ>::identity(n, PosLeadZ::one());
    for (int k = 0; k < w.length(); ++k)
        b = b * chevalley(Chevalley::Y, n, w.letters[k], PosLeadZ(pl_inv(m[k])));
    auto roots = positive_root_sequence(w);
    std::map<PositiveRoot, PosLead> byroot;
    for (int k = 0; k < w.length(); ++k) byroot[roots[k]] = m[k];
    auto diag = universal_weight_poslead(n, byroot, d);
    Matrix<PosLeadZ> tr(n, PosLeadZ::zero());
    for (int i = 0; i < n; ++i) tr.at(i, i) = PosLeadZ(diag[i]);
    return b * tr;
}

std::vector<LaurentMonomial> universal_weight_monomials(int n, const VarTablePtr& vt) {
    // coordinate variables are the N root slots in i0 order, i.e. coordinate
    // s_i + (j-i) holds m'_{alpha_ij}
    const int nv = vt->size();
    const int N = vt->n_coords();
    auto slot = [&](int i, int j) { return block_offset(n, i) + (j - i) - 1; };
    std::vector<LaurentMonomial> out;
    for (int row = 1; row <= n; ++row) {
        int j = n - row + 1;
        LaurentMonomial e = LaurentMonomial::one(nv);
        e.exps[N + j - 1] = 1;
        for (int l = 1; l < j; ++l) e.exps[slot(l, j)] += 1;
        for (int l = j; l <= n - 1; ++l) e.exps[slot(j, l + 1)] -= 1;
        out.push_back(e);
    }
    return out;
}

std::vector<PosLead> universal_weight_poslead(int n, const std::map<PositiveRoot, PosLead>& m,
                                              const std::vector<PosLead>& d) {
    std::vector<PosLead> out;
    for (int row = 1; row <= n; ++row) {
        int j = n - row + 1;
        PosLead e = d[j - 1];
        for (int l = 1; l < j; ++l) e = pl_mul(e, m.at({l, j}));
        for (int l = j; l <= n - 1; ++l) e = pl_div(e, m.at({j, l + 1}));
        out.push_back(e);
    }
    return out;
}

MonomialMap string_to_ideal_i0(int n) {
    const int N = n * (n - 1) / 2;
    MonomialMap mm;
    mm.rules.assign(N, std::vector<int>(N, 0));
    for (int k = 1; k <= n - 1; ++k)
        for (int a = 1; a <= n - k; ++a) {
            int target = block_offset(n, k) + a - 1;  // m_{s_k + a}
            if (k == 1) {
                mm.rules[target][block_offset(n, n - a)] = 1;  // z_{1 + s_{n-a}}
            } else {
                mm.rules[target][k + block_offset(n, n - k - a + 1) - 1] = 1;
                mm.rules[target][k - 1 + block_offset(n, n - k - a + 1) - 1] = -1;
            }
        }
    return mm;
}

MonomialMap ideal_to_string_i0(int n) {
    const int N = n * (n - 1) / 2;
    MonomialMap mm;
    mm.rules.assign(N, std::vector<int>(N, 0));
    // z_{k + s_{n-k-a+1}} = prod_{r=0}^{k-1} m_{s_{k-r} + a + r}
    for (int k = 1; k <= n - 1; ++k)
        for (int a = 1; a <= n - k; ++a) {
            int target = k + block_offset(n, n - k - a + 1) - 1;
            for (int r = 0; r <= k - 1; ++r)
                mm.rules[target][block_offset(n, k - r) + a + r - 1] += 1;
        }
    return mm;
}

}  // namespace flagpoly
