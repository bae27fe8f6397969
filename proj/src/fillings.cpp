#include "flagpoly/fillings.hpp"

#include <algorithm>
#include <numeric>

namespace flagpoly {

IdealFilling IdealFilling::from_first_diagonal(const std::vector<Rational>& diag) {
    IdealFilling f;
    f.n = static_cast<int>(diag.size()) + 1;
    for (int k = 1; k <= f.n - 1; ++k) {
        if (diag[k - 1] < 0) throw FillingError("filling entries must be nonnegative");
        f.entries[{k, k + 1}] = diag[k - 1];
    }
    for (int len = 2; len <= f.n - 1; ++len)
        for (int i = 1; i + len <= f.n; ++i) {
            int j = i + len;
            f.entries[{i, j}] = std::max(f.at(i + 1, j), f.at(i, j - 1));
        }
    return f;
}

bool validate_filling(const IdealFilling& f) {
    for (int i = 1; i < f.n; ++i)
        for (int j = i + 1; j <= f.n; ++j) {
            auto it = f.entries.find({i, j});
            if (it == f.entries.end() || it->second < 0) return false;
            if (j - i >= 2 && it->second != std::max(f.at(i + 1, j), f.at(i, j - 1))) return false;
        }
    return true;
}

namespace {

// Solves an n x m rational linear system by Gaussian elimination; returns
// nullopt when inconsistent. Expects m unknowns and >= m equations.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> rhs) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> where(cols, -1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int r = row; r < rows; ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[row]);
        std::swap(rhs[sel], rhs[row]);
        Rational inv = 1 / a[row][col];
        for (int c = col; c < cols; ++c) a[row][c] *= inv;
        rhs[row] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
            rhs[r] -= f * rhs[row];
        }
        where[col] = row;
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    for (int c = 0; c < cols; ++c)
        if (where[c] < 0) return std::nullopt;  // underdetermined; not expected here
    std::vector<Rational> x(cols);
    for (int c = 0; c < cols; ++c) x[c] = rhs[where[c]];
    return x;
}

}  // namespace

std::vector<IdealFilling> filling_candidates(const DominantWeight& lambda) {
    const int n = lambda.n();
    const int k = n - 1;  // first-diagonal unknowns beta_1..beta_k
    Rational ell = lambda.ell();

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<IdealFilling> found;

    do {
        // ordering beta_{perm[0]} >= beta_{perm[1]} >= ... ; window max is the
        // entry with the smallest rank
        std::vector<int> rank(k);
        for (int r = 0; r < k; ++r) rank[perm[r]] = r;
        auto argmax = [&](int i, int j) {  // window i..j-1 of the first diagonal
            int best = i;
            for (int t = i + 1; t <= j - 1; ++t)
                if (rank[t - 1] < rank[best - 1]) best = t;
            return best;  // n_ij = beta_best
        };
        // lambda_r - ell = sum_{j>r} n_{rj} - sum_{i<r} n_{ir}
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k, 0));
        std::vector<Rational> rhs(n);
        for (int r = 1; r <= n; ++r) {
            rhs[r - 1] = lambda.comps[r - 1] - ell;
            for (int j = r + 1; j <= n; ++j) a[r - 1][argmax(r, j) - 1] += 1;
            for (int i = 1; i < r; ++i) a[r - 1][argmax(i, r) - 1] -= 1;
        }
        auto sol = solve_linear(a, rhs);
        if (!sol) continue;
        // consistency: nonnegative and compatible with the assumed ordering
        bool ok = true;
        for (auto& b : *sol)
            if (b < 0) ok = false;
        for (int r = 0; ok && r + 1 < k; ++r)
            if ((*sol)[perm[r]] < (*sol)[perm[r + 1]]) ok = false;
        if (!ok) continue;
        IdealFilling f = IdealFilling::from_first_diagonal(*sol);
        if (std::find(found.begin(), found.end(), f) == found.end()) found.push_back(f);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

IdealFilling filling_for_weight(const DominantWeight& lambda) {
    auto cands = filling_candidates(lambda);
    if (cands.empty()) throw FillingError("no ideal filling found (unexpected)");
    if (cands.size() > 1) throw FillingError("ideal filling for lambda is not unique (unexpected)");
    return cands[0];
}

namespace {

Rational hh(const IdealFilling& f, int i, int j) {  // sum_{l > j} n_il
    Rational s = 0;
    for (int l = j + 1; l <= f.n; ++l) s += f.at(i, l);
    return s;
}

Rational hv(const IdealFilling& f, int i, int j) {  // sum_{l < i} n_lj
    Rational s = 0;
    for (int l = 1; l < i; ++l) s += f.at(l, j);
    return s;
}

}  // namespace

TropQuiverPoint filling_to_trop_point(const IdealFilling& f, const DominantWeight& lambda) {
    if (lambda.n() != f.n) throw FillingError("filling and weight sizes differ");
    TropQuiverPoint p;
    p.n = f.n;
    Rational ell = lambda.ell();
    for (int i = 1; i <= f.n; ++i)
        for (int j = i; j <= f.n; ++j) p.delta[{j, i}] = hh(f, i, j) - hv(f, i, j) + ell;

    Quiver q = build_quiver(f.n);
    for (const auto& a : q.arrows) {
        QVertex h = a.head(), t = a.tail();
        p.rho[a.name()] = p.delta.at({h.i, h.j}) - p.delta.at({t.i, t.j});
    }
    for (const auto& v : q.dot_vertices()) {
        bool first = true;
        Rational m = 0;
        for (auto* a : q.incoming(v)) {
            Rational r = p.rho.at(a->name());
            if (first || r < m) m = r;
            first = false;
        }
        p.pi[{v.i, v.j}] = m;
    }
    if (!trop_critical_conditions_hold(p))
        throw FillingError("constructed point violates the tropical critical conditions");
    return p;
}

bool trop_critical_conditions_hold(const TropQuiverPoint& p) {
    Quiver q = build_quiver(p.n);
    for (const auto& v : q.dot_vertices()) {
        std::optional<Rational> in, out;
        for (auto* a : q.incoming(v)) {
            Rational r = p.rho.at(a->name());
            if (!in || r < *in) in = r;
        }
        for (auto* a : q.outgoing(v)) {
            Rational r = p.rho.at(a->name());
            if (!out || r < *out) out = r;
        }
        if (!in || !out || *in != *out) return false;
    }
    return true;
}

IdealFilling trop_point_to_filling(const TropQuiverPoint& p) {
    if (!trop_critical_conditions_hold(p))
        throw FillingError("tropical critical conditions do not hold");
    IdealFilling f;
    f.n = p.n;
    for (int i = 1; i < p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j) f.entries[{i, j}] = p.pi.at({j, i});
    if (!validate_filling(f)) throw FillingError("pi values do not form an ideal filling");
    return f;
}

std::map<PositiveRoot, Rational> tropical_critical_point(const DominantWeight& lambda,
                                                         const ReducedWord& word) {
    if (word.n != lambda.n()) throw std::domain_error("word and weight sizes differ");
    IdealFilling f = filling_for_weight(lambda);
    std::map<PositiveRoot, Rational> out;
    for (auto& [ij, v] : f.entries) out[PositiveRoot(ij.first, ij.second)] = v;
    return out;
}

std::vector<Rational> tropical_critical_point_slots(const DominantWeight& lambda,
                                                    const ReducedWord& word) {
    auto byroot = tropical_critical_point(lambda, word);
    auto roots = positive_root_sequence(word);
    std::vector<Rational> out;
    for (auto& r : roots) out.push_back(byroot.at(r));
    return out;
}

}  // namespace flagpoly
