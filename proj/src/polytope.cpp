#include "flagpoly/polytope.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <set>

namespace flagpoly {

namespace {

std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> rhs) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) return std::nullopt;
        std::swap(a[sel], a[col]);
        std::swap(rhs[sel], rhs[col]);
        Rational inv = 1 / a[col][col];
        for (int c = col; c < n; ++c) a[col][c] *= inv;
        rhs[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

int matrix_rank(std::vector<std::vector<Rational>> a) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[rank][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

// kernel vector of a (dim-1) x dim system of full rank dim-1, when unique
std::optional<std::vector<Rational>> kernel_vector(std::vector<std::vector<Rational>> a, int cols) {
    if (a.empty()) {
        if (cols != 1) return std::nullopt;
        return std::vector<Rational>{1};
    }
    const int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        Rational inv = 1 / a[rank][col];
        for (int c = col; c < cols; ++c) a[rank][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != cols - 1) return std::nullopt;
    int freec = 0;
    {
        std::set<int> pivots(pivot_col.begin(), pivot_col.end());
        for (int c = 0; c < cols; ++c)
            if (!pivots.count(c)) freec = c;
    }
    std::vector<Rational> v(cols, 0);
    v[freec] = 1;
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a[r][freec];
    return v;
}

std::vector<std::vector<int>> all_combinations(int m, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(idx);
            return;
        }
        for (int i = start; i < m; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

TropPolytope polytope_hrep(PolytopeChart chart, const DominantWeight& lambda) {
    const int n = lambda.n();
    TropPolytope p;
    p.lambda = lambda;
    p.chart = chart;
    if (chart == PolytopeChart::StringZ || chart == PolytopeChart::IdealM) {
        Decoration dec = decorate(build_quiver(n),
                                  chart == PolytopeChart::StringZ ? ChartKind::StringZ
                                                                  : ChartKind::IdealM);
        p.dim = dec.vt->n_coords();
        for (const auto& m : superpotential_monomials(dec)) {
            auto aff = tropicalize_monomial(dec.vt, m, lambda);
            p.ineqs.push_back({aff.coeffs, aff.cst});
        }
        return p;
    }
    // Gelfand-Tsetlin: one coordinate per dot vertex, one inequality per arrow
    Quiver q = build_quiver(n);
    auto dots = q.dot_vertices();
    p.dim = static_cast<int>(dots.size());
    auto index_of = [&](const QVertex& v) -> int {
        for (size_t k = 0; k < dots.size(); ++k)
            if (dots[k] == v) return static_cast<int>(k);
        return -1;
    };
    for (const auto& a : q.arrows) {
        AffineForm f;
        f.a.assign(p.dim, 0);
        f.c = 0;
        QVertex h = a.head(), t = a.tail();
        if (h.is_star())
            f.c += lambda.comps[h.i - 1];
        else
            f.a[index_of(h)] += 1;
        if (t.is_star())
            f.c -= lambda.comps[t.i - 1];
        else
            f.a[index_of(t)] -= 1;
        p.ineqs.push_back(std::move(f));
    }
    return p;
}

bool polytope_bounded(const TropPolytope& p) {
    std::vector<std::vector<Rational>> rows;
    for (auto& f : p.ineqs) rows.push_back(f.a);
    if (matrix_rank(rows) < p.dim) return false;  // recession cone contains a line
    // pointed cone: search extreme rays over (dim-1)-subsets
    auto combos = all_combinations(static_cast<int>(p.ineqs.size()), p.dim - 1);
    for (auto& cmb : combos) {
        std::vector<std::vector<Rational>> sub;
        for (int i : cmb) sub.push_back(p.ineqs[i].a);
        auto v = kernel_vector(sub, p.dim);
        if (!v) continue;
        bool nonneg = true, nonpos = true;
        for (auto& f : p.ineqs) {
            Rational s = 0;
            for (int k = 0; k < p.dim; ++k) s += f.a[k] * (*v)[k];
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
        }
        if (nonneg || nonpos) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> polytope_vertices_serial(const TropPolytope& p) {
    if (p.dim > 8) throw SizeLimitError("vertex enumeration supports dim <= 8");
    if (!polytope_bounded(p)) throw UnboundedError("polytope has an unbounded direction");
    auto combos = all_combinations(static_cast<int>(p.ineqs.size()), p.dim);
    std::set<std::vector<Rational>> verts;
    for (auto& cmb : combos) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> rhs;
        for (int i : cmb) {
            a.push_back(p.ineqs[i].a);
            rhs.push_back(-p.ineqs[i].c);
        }
        auto x = solve_square(a, rhs);
        if (!x) continue;
        if (p.contains(*x)) verts.insert(*x);
    }
    return {verts.begin(), verts.end()};
}

std::vector<std::vector<Rational>> polytope_vertices(const TropPolytope& p) {
    if (p.dim > 8) throw SizeLimitError("vertex enumeration supports dim <= 8");
    if (!polytope_bounded(p)) throw UnboundedError("polytope has an unbounded direction");
    auto combos = all_combinations(static_cast<int>(p.ineqs.size()), p.dim);
    const int total = static_cast<int>(combos.size());
    std::vector<std::set<std::vector<Rational>>> per_thread(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic, 16)
    for (int c = 0; c < total; ++c) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> rhs;
        for (int i : combos[c]) {
            a.push_back(p.ineqs[i].a);
            rhs.push_back(-p.ineqs[i].c);
        }
        auto x = solve_square(a, rhs);
        if (x && p.contains(*x)) per_thread[omp_get_thread_num()].insert(*x);
    }
    std::set<std::vector<Rational>> verts;
    for (auto& s : per_thread) verts.insert(s.begin(), s.end());
    return {verts.begin(), verts.end()};
}

namespace {

struct ScaledForm {
    std::vector<long long> a;
    long long c;
};

struct LatticeBox {
    std::vector<long long> lo, hi;  // inclusive; empty polytope gives lo > hi
    std::vector<ScaledForm> forms;
    long long cells() const {
        long long t = 1;
        for (size_t i = 0; i < lo.size(); ++i) {
            if (hi[i] < lo[i]) return 0;
            t *= hi[i] - lo[i] + 1;
        }
        return t;
    }
};

LatticeBox lattice_setup(const TropPolytope& p, bool parallel) {
    auto verts = parallel ? polytope_vertices(p) : polytope_vertices_serial(p);
    LatticeBox box;
    box.lo.assign(p.dim, 0);
    box.hi.assign(p.dim, -1);
    if (!verts.empty()) {
        for (int k = 0; k < p.dim; ++k) {
            Rational mn = verts[0][k], mx = verts[0][k];
            for (auto& v : verts) {
                if (v[k] < mn) mn = v[k];
                if (v[k] > mx) mx = v[k];
            }
            box.lo[k] = static_cast<long long>(rat_ceil(mn));
            box.hi[k] = static_cast<long long>(rat_floor(mx));
        }
    }
    for (auto& f : p.ineqs) {
        BigInt den = boost::multiprecision::denominator(f.c);
        for (auto& co : f.a)
            den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(co));
        ScaledForm sf;
        Rational scale(den, 1);
        for (auto& co : f.a) {
            Rational v = co * scale;
            sf.a.push_back(static_cast<long long>(boost::multiprecision::numerator(v)));
        }
        Rational vc = f.c * scale;
        sf.c = static_cast<long long>(boost::multiprecision::numerator(vc));
        box.forms.push_back(std::move(sf));
    }
    return box;
}

bool point_ok(const LatticeBox& box, const std::vector<long long>& x) {
    for (auto& f : box.forms) {
        long long acc = f.c;
        for (size_t i = 0; i < x.size(); ++i) acc += f.a[i] * x[i];
        if (acc < 0) return false;
    }
    return true;
}

void unflatten(const LatticeBox& box, long long idx, std::vector<long long>& x) {
    for (size_t i = 0; i < box.lo.size(); ++i) {
        long long w = box.hi[i] - box.lo[i] + 1;
        x[i] = box.lo[i] + idx % w;
        idx /= w;
    }
}

}  // namespace

long long lattice_count_serial(const TropPolytope& p) {
    LatticeBox box = lattice_setup(p, false);
    long long total = box.cells(), count = 0;
    std::vector<long long> x(p.dim);
    for (long long i = 0; i < total; ++i) {
        unflatten(box, i, x);
        if (point_ok(box, x)) ++count;
    }
    return count;
}

long long lattice_count(const TropPolytope& p) {
    LatticeBox box = lattice_setup(p, true);
    long long total = box.cells(), count = 0;
#pragma omp parallel reduction(+ : count)
    {
        std::vector<long long> x(p.dim);
#pragma omp for schedule(static)
        for (long long i = 0; i < total; ++i) {
            unflatten(box, i, x);
            if (point_ok(box, x)) ++count;
        }
    }
    return count;
}

std::vector<std::vector<long long>> lattice_points(const TropPolytope& p) {
    LatticeBox box = lattice_setup(p, false);
    long long total = box.cells();
    std::vector<std::vector<long long>> pts;
    std::vector<long long> x(p.dim);
    for (long long i = 0; i < total; ++i) {
        unflatten(box, i, x);
        if (point_ok(box, x)) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<Rational> trop_weight_projection(const std::vector<Rational>& point,
                                             PolytopeChart chart, const DominantWeight& lambda) {
    const int n = lambda.n();
    std::vector<Rational> wt(n, 0);
    if (chart == PolytopeChart::StringZ) {
        // entry n-j+1 of the diagonal: lambda_j + sum_{i_m=j-1} z_m - sum_{i_m=j} z_m
        auto i0 = word_i0(n);
        for (int j = 1; j <= n; ++j) {
            Rational v = lambda.comps[j - 1];
            for (int m = 0; m < i0.length(); ++m) {
                if (i0.letters[m] == j - 1) v += point[m];
                if (i0.letters[m] == j) v -= point[m];
            }
            wt[n - j] = v;
        }
        return wt;
    }
    if (chart == PolytopeChart::IdealM) {
        auto slot = [&](int i, int j) { return block_offset(n, i) + (j - i) - 1; };
        for (int j = 1; j <= n; ++j) {
            Rational v = lambda.comps[j - 1];
            for (int l = 1; l < j; ++l) v += point[slot(l, j)];
            for (int l = j; l <= n - 1; ++l) v -= point[slot(j, l + 1)];
            wt[n - j] = v;
        }
        return wt;
    }
    // vertex chart: t_i = Xi_i / Xi_{i+1} over the diagonals
    Quiver q = build_quiver(n);
    auto dots = q.dot_vertices();
    auto value_at = [&](int i, int j) -> Rational {
        if (i == j) return lambda.comps[i - 1];
        for (size_t k = 0; k < dots.size(); ++k)
            if (dots[k] == QVertex{i, j}) return point[k];
        throw std::logic_error("vertex out of range");
    };
    std::vector<Rational> xi(n + 2, 0);
    for (int i = 1; i <= n; ++i)
        for (int t = 0; i + t <= n; ++t) xi[i] += value_at(i + t, 1 + t);
    for (int i = 1; i <= n; ++i) wt[i - 1] = xi[i] - xi[i + 1];
    return wt;
}

std::vector<Rational> trop_braid_move(const std::vector<Rational>& vals, const Move& mv) {
    std::vector<Rational> out = vals;
    int p = mv.pos - 1;
    if (mv.kind == Move::Commutation) {
        std::swap(out[p], out[p + 1]);
        return out;
    }
    const Rational& x = vals[p];
    const Rational& y = vals[p + 1];
    const Rational& z = vals[p + 2];
    Rational mn = x < z ? x : z;
    out[p] = y + mn - x;      // mu''_beta
    out[p + 1] = x + z - mn;  // mu''_{alpha+beta}
    out[p + 2] = y + mn - z;  // mu''_alpha
    return out;
}

std::vector<Rational> pl_transfer(const std::vector<Rational>& point, const ReducedWord& w1,
                                  const ReducedWord& w2) {
    std::vector<Rational> cur = point;
    for (const Move& mv : braid_path(w1, w2)) cur = trop_braid_move(cur, mv);
    return cur;
}

bool ideal_polytope_member(const std::vector<Rational>& point, const ReducedWord& word,
                           const DominantWeight& lambda) {
    auto i0 = word_i0(word.n);
    auto back = pl_transfer(point, word, i0);
    return polytope_hrep(PolytopeChart::IdealM, lambda).contains(back);
}

namespace {

long long gt_count_rec(const std::vector<long long>& upper) {
    if (upper.size() == 1) return 1;
    // enumerate the next row interlacing `upper`
    const int len = static_cast<int>(upper.size()) - 1;
    std::vector<long long> row(len);
    long long count = 0;
    std::function<void(int)> rec = [&](int k) {
        if (k == len) {
            count += gt_count_rec(row);
            return;
        }
        for (long long v = upper[k + 1]; v <= upper[k]; ++v) {
            row[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

long long gt_pattern_count_serial(const DominantWeight& lambda) {
    if (!lambda.integral()) throw std::domain_error("GT patterns need integral lambda");
    std::vector<long long> top;
    for (auto& c : lambda.comps)
        top.push_back(static_cast<long long>(boost::multiprecision::numerator(c)));
    return gt_count_rec(top);
}

long long gt_pattern_count(const DominantWeight& lambda) {
    if (!lambda.integral()) throw std::domain_error("GT patterns need integral lambda");
    std::vector<long long> top;
    for (auto& c : lambda.comps)
        top.push_back(static_cast<long long>(boost::multiprecision::numerator(c)));
    if (top.size() <= 2) return gt_count_rec(top);
    // parallelise over the first entry of the second row
    long long total = 0;
    std::vector<std::pair<long long, std::vector<long long>>> tasks;
    {
        const int len = static_cast<int>(top.size()) - 1;
        std::vector<long long> row(len);
        std::function<void(int)> rec = [&](int k) {
            if (k == len) {
                tasks.emplace_back(0, row);
                return;
            }
            for (long long v = top[k + 1]; v <= top[k]; ++v) {
                row[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
    }
    const int ntasks = static_cast<int>(tasks.size());
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total)
    for (int t = 0; t < ntasks; ++t) total += gt_count_rec(tasks[t].second);
    return total;
}

}  // namespace flagpoly
