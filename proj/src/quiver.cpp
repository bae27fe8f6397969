#include "flagpoly/quiver.hpp"

#include <sstream>

namespace flagpoly {

std::vector<QVertex> Quiver::dot_vertices() const {
    std::vector<QVertex> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.push_back({i, j});
    return out;
}

std::vector<const QArrow*> Quiver::incoming(const QVertex& v) const {
    std::vector<const QArrow*> out;
    for (const auto& a : arrows)
        if (a.head() == v) out.push_back(&a);
    return out;
}

std::vector<const QArrow*> Quiver::outgoing(const QVertex& v) const {
    std::vector<const QArrow*> out;
    for (const auto& a : arrows)
        if (a.tail() == v) out.push_back(&a);
    return out;
}

Quiver build_quiver(int n) {
    if (n < 2) throw std::domain_error("quiver needs n >= 2");
    Quiver q;
    q.n = n;
    for (int j = 1; j <= n - 1; ++j)
        for (int i = j; i <= n - 1; ++i) q.arrows.push_back({true, i, j});
    for (int j = 2; j <= n; ++j)
        for (int i = j; i <= n; ++i) q.arrows.push_back({false, i, j});
    return q;
}

namespace {

// numerator of the ideal-coordinate vertical arrow value r_{a_{ij}}:
// prod_{r=0}^{j-1} m_{s_{j-r} + i-j+1+r}  (1-based m indices)
std::vector<int> ideal_vertical_num(int n, int i, int j) {
    std::vector<int> idx;
    for (int r = 0; r <= j - 1; ++r) idx.push_back(block_offset(n, j - r) + (i - j + 1 + r));
    return idx;
}

}  // namespace

Decoration decorate(const Quiver& q, ChartKind chart) {
    const int n = q.n;
    const int N = n * (n - 1) / 2;
    Decoration dec;
    dec.quiver = q;
    dec.chart = chart;
    dec.vt = VarTable::coords_and_params(chart == ChartKind::StringZ ? "z" : "m", N, n);
    const int nv = dec.vt->size();

    auto coord = [&](int onebased) { return N >= onebased && onebased >= 1 ? onebased - 1 : -1; };
    auto dvar = [&](int j) { return N + j - 1; };

    // vertical arrows
    for (const auto& a : q.arrows) {
        if (!a.vertical) continue;
        LaurentMonomial m = LaurentMonomial::one(nv);
        if (chart == ChartKind::StringZ) {
            // r_{a_{ij}} = p_{s_j + n - i} with p in terms of z
            int j = a.j, i = a.i;
            if (j == 1) {
                m.exps[coord(1 + block_offset(n, n - i))] += 1;
            } else {
                m.exps[coord(j + block_offset(n, n - i))] += 1;
                m.exps[coord(j - 1 + block_offset(n, n - i + 1))] -= 1;
            }
        } else {
            for (int k : ideal_vertical_num(n, a.i, a.j)) m.exps[coord(k)] += 1;
            if (a.j >= 2)
                for (int k : ideal_vertical_num(n, a.i - 1, a.j - 1)) m.exps[coord(k)] -= 1;
        }
        dec.arrow_values[a.name()] = m;
    }

    // horizontal arrows, from the star relation down each column
    for (int j = 2; j <= n; ++j) {
        LaurentMonomial prev;
        {
            // r_{b_{jj}} = (d_{j-1}/d_j) / r_{a_{j-1,j-1}}
            LaurentMonomial m = LaurentMonomial::one(nv);
            m.exps[dvar(j - 1)] += 1;
            m.exps[dvar(j)] -= 1;
            const LaurentMonomial& adiag = dec.arrow_values.at(QArrow{true, j - 1, j - 1}.name());
            m = mono_div(m, adiag);
            dec.arrow_values[QArrow{false, j, j}.name()] = m;
            prev = m;
        }
        for (int i = j; i <= n - 1; ++i) {
            // box: r_{b_{i+1,j}} = r_{a_{ij}} r_{b_{ij}} / r_{a_{i,j-1}}
            const LaurentMonomial& aij = dec.arrow_values.at(QArrow{true, i, j}.name());
            const LaurentMonomial& aijm1 = dec.arrow_values.at(QArrow{true, i, j - 1}.name());
            LaurentMonomial m = mono_div(mono_mul(aij, prev), aijm1);
            dec.arrow_values[QArrow{false, i + 1, j}.name()] = m;
            prev = m;
        }
    }
    return dec;
}

LaurentPoly quiver_superpotential(const Decoration& dec) {
    LaurentPoly w(dec.vt);
    for (const auto& a : dec.quiver.arrows) w = w + LaurentPoly(dec.vt, dec.value(a));
    return w;
}

std::vector<LaurentMonomial> superpotential_monomials(const Decoration& dec) {
    std::vector<LaurentMonomial> out;
    for (const auto& a : dec.quiver.arrows) out.push_back(dec.value(a));
    return out;
}

TorusMaps torus_maps(const Decoration& dec) {
    const int n = dec.quiver.n;
    const int nv = dec.vt->size();
    const int N = dec.vt->n_coords();
    auto key = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };

    TorusMaps tm;
    LaurentMonomial dn = LaurentMonomial::one(nv);
    dn.exps[N + n - 1] = 1;  // d_n
    tm.vertex_x[key(n, n)] = dn;
    for (int j = n - 1; j >= 1; --j)
        tm.vertex_x[key(n, j)] = mono_mul(tm.vertex_x[key(n, j + 1)],
                                          dec.arrow_values.at(QArrow{false, n, j + 1}.name()));
    for (int j = 1; j <= n - 1; ++j)
        for (int i = n - 1; i >= j; --i)
            tm.vertex_x[key(i, j)] = mono_mul(tm.vertex_x[key(i + 1, j)],
                                              dec.arrow_values.at(QArrow{true, i, j}.name()));
    // integrity: stars must reproduce d_i (path independence / box relations)
    for (int i = 1; i <= n; ++i) {
        LaurentMonomial expect = LaurentMonomial::one(nv);
        expect.exps[N + i - 1] = 1;
        if (!(tm.vertex_x[key(i, i)] == expect))
            throw DecorationError("star vertex does not reproduce d_" + std::to_string(i));
        tm.kappa.push_back(expect);
    }
    // Xi_i = prod over the i-th diagonal {v_{i,1}, v_{i+1,2}, ..., v_{n,n-i+1}}
    std::vector<LaurentMonomial> xi(n + 2, LaurentMonomial::one(nv));
    for (int i = 1; i <= n; ++i) {
        LaurentMonomial p = LaurentMonomial::one(nv);
        for (int t = 0; i + t <= n; ++t) p = mono_mul(p, tm.vertex_x[key(i + t, 1 + t)]);
        xi[i] = p;
    }
    for (int i = 1; i <= n; ++i) tm.gamma.push_back(mono_div(xi[i], xi[i + 1]));
    return tm;
}

std::vector<CriticalCondition> critical_conditions(const Decoration& dec) {
    std::vector<CriticalCondition> out;
    for (const auto& v : dec.quiver.dot_vertices()) {
        CriticalCondition cc;
        cc.vertex = v;
        for (auto* a : dec.quiver.incoming(v)) cc.incoming.push_back(dec.value(*a));
        for (auto* a : dec.quiver.outgoing(v)) cc.outgoing.push_back(dec.value(*a));
        out.push_back(std::move(cc));
    }
    return out;
}

namespace {

PosLead eval_monomial(const LaurentMonomial& mono, const std::vector<PosLead>& all) {
    PosLead acc(0, mono.coeff);
    for (size_t i = 0; i < mono.exps.size(); ++i) {
        int e = mono.exps[i];
        if (e == 0) continue;
        Rational c = 1;
        int k = e < 0 ? -e : e;
        for (int s = 0; s < k; ++s) c *= all[i].coeff;
        if (e < 0) c = 1 / c;
        acc = pl_mul(acc, PosLead(all[i].val * e, c));
    }
    return acc;
}

}  // namespace

OutgoingSumReport outgoing_sum_check(const Decoration& dec, const std::vector<PosLead>& m,
                                     const std::vector<PosLead>& d) {
    if (dec.chart != ChartKind::IdealM)
        throw std::domain_error("outgoing_sum_check expects the ideal-coordinate decoration");
    const int n = dec.quiver.n;
    std::vector<PosLead> all = m;
    for (auto& x : d) all.push_back(x);

    OutgoingSumReport rep;
    rep.preconditions_hold = true;
    for (const auto& cc : critical_conditions(dec)) {
        PosLead in = eval_monomial(cc.incoming[0], all);
        for (size_t k = 1; k < cc.incoming.size(); ++k)
            in = pl_add(in, eval_monomial(cc.incoming[k], all));
        PosLead out = eval_monomial(cc.outgoing[0], all);
        for (size_t k = 1; k < cc.outgoing.size(); ++k)
            out = pl_add(out, eval_monomial(cc.outgoing[k], all));
        if (!(in == out)) {
            rep.preconditions_hold = false;
            std::ostringstream os;
            os << "critical condition fails at v_" << cc.vertex.i << cc.vertex.j << ": "
               << pl_str(in) << " vs " << pl_str(out);
            rep.detail = os.str();
            return rep;
        }
    }
    rep.identity_holds = true;
    for (const auto& cc : critical_conditions(dec)) {
        PosLead out = eval_monomial(cc.outgoing[0], all);
        for (size_t k = 1; k < cc.outgoing.size(); ++k)
            out = pl_add(out, eval_monomial(cc.outgoing[k], all));
        // v_{ik} with i = row, k = column: expect m_{s_k + i - k}
        int idx = block_offset(n, cc.vertex.j) + (cc.vertex.i - cc.vertex.j);
        if (!(out == m[idx - 1])) {
            rep.identity_holds = false;
            std::ostringstream os;
            os << "outgoing sum at v_" << cc.vertex.i << cc.vertex.j << " = " << pl_str(out)
               << " but m_" << idx << " = " << pl_str(m[idx - 1]);
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

std::vector<PosLead> solve_critical_n3(const DominantWeight& lambda) {
    if (lambda.n() != 3) throw std::domain_error("solve_critical_n3 needs n = 3");
    Rational q1 = lambda.comps[0] - lambda.comps[1];
    Rational q2 = lambda.comps[1] - lambda.comps[2];
    if (q1 == q2)
        throw NonRationalError(
            "leading coefficients are irrational at lambda_1-lambda_2 == lambda_2-lambda_3");
    // valuations from the unique ideal filling; all leading coefficients are 1
    // off the tie (each critical equation has a unique min-attaining term)
    Rational b1, b2, b3;
    if (q1 < q2) {  // beta_2 = beta_3 branch
        b1 = q1 / 2;
        b2 = (lambda.comps[0] + lambda.comps[1] - 2 * lambda.comps[2]) / 6;
        b3 = b2;
    } else {  // beta_1 = beta_2 branch
        b1 = (2 * lambda.comps[0] - lambda.comps[1] - lambda.comps[2]) / 6;
        b2 = b1;
        b3 = q2 / 2;
    }
    std::vector<PosLead> m = {PosLead(b1, 1), PosLead(b2, 1), PosLead(b3, 1)};
    // verify all three critical point conditions over PosLead
    Decoration dec = decorate(build_quiver(3), ChartKind::IdealM);
    std::vector<PosLead> d;
    for (auto& li : lambda.comps) d.emplace_back(li, 1);
    auto rep = outgoing_sum_check(dec, m, d);
    if (!rep.preconditions_hold)
        throw std::logic_error("n=3 critical solution failed verification: " + rep.detail);
    return m;
}

}  // namespace flagpoly
