#include <doctest.h>

#include <random>

#include "flagpoly/polytope.hpp"

using namespace flagpoly;

namespace {

// permutohedron membership: x lies in conv(S_n orbit of lambda) iff the
// sorted partial sums of x are dominated by those of lambda with equal total
bool in_weight_polytope(std::vector<Rational> x, const DominantWeight& lam) {
    std::sort(x.rbegin(), x.rend());
    Rational sx = 0, sl = 0;
    for (size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sl += lam.comps[k];
        if (sx > sl) return false;
    }
    return sx == sl;
}

}  // namespace

TEST_CASE("n=2 ideal polytope is the segment [0, lambda1-lambda2]") {
    DominantWeight lam({1, 0});
    TropPolytope p = polytope_hrep(PolytopeChart::IdealM, lam);
    CHECK(p.dim == 1);
    auto verts = polytope_vertices(p);
    REQUIRE(verts.size() == 2);
    CHECK(verts[0] == std::vector<Rational>{0});
    CHECK(verts[1] == std::vector<Rational>{1});
    CHECK(lattice_count(p) == 2);
}

TEST_CASE("vertex enumeration examples at lambda=(2,1,-1)") {
    DominantWeight lam({2, 1, -1});
    TropPolytope ps = polytope_hrep(PolytopeChart::StringZ, lam);
    auto vs = polytope_vertices(ps);
    std::set<std::vector<Rational>> sset(vs.begin(), vs.end());
    CHECK(sset.count({0, 0, 0}));
    CHECK(sset.count({3, 2, 0}));
    CHECK(sset.count({0, 1, 1}));
    CHECK(sset.size() == 7);
    // (1,2,0) is a distinguished boundary point but not a vertex
    CHECK(ps.contains({1, 2, 0}));
    CHECK(!sset.count({1, 2, 0}));

    TropPolytope pm = polytope_hrep(PolytopeChart::IdealM, lam);
    auto vm = polytope_vertices(pm);
    std::set<std::vector<Rational>> mset(vm.begin(), vm.end());
    CHECK(mset.count({1, 0, 3}));
    CHECK(mset.count({0, 1, -1}));
    CHECK(mset.size() == 7);

    CHECK(lattice_count(ps) == 15);
    CHECK(lattice_count(pm) == 15);
}

TEST_CASE("lattice point list and trivial weight") {
    DominantWeight zero({0, 0, 0});
    TropPolytope p = polytope_hrep(PolytopeChart::StringZ, zero);
    auto pts = lattice_points(p);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == std::vector<long long>{0, 0, 0});
}

TEST_CASE("weight projections") {
    DominantWeight lam({2, 1, -1});
    // string vertex (l1-l3, l2-l3, 0) -> (l2, l1, l3)
    CHECK(trop_weight_projection({3, 2, 0}, PolytopeChart::StringZ, lam) ==
          std::vector<Rational>{1, 2, -1});
    // ideal point (0, l2-l3, 0) -> (l2, l2, l1-l2+l3)
    CHECK(trop_weight_projection({0, 2, 0}, PolytopeChart::IdealM, lam) ==
          std::vector<Rational>{1, 1, 0});
    // the critical point projects to (ell, ell, ell)
    auto slots = tropical_critical_point_slots(lam, word_i0(3));
    auto wt = trop_weight_projection(slots, PolytopeChart::IdealM, lam);
    CHECK(wt == std::vector<Rational>{Rational(2, 3), Rational(2, 3), Rational(2, 3)});

    // weight projections of all lattice points lie in the weight polytope
    for (auto chart : {PolytopeChart::StringZ, PolytopeChart::IdealM}) {
        TropPolytope p = polytope_hrep(chart, lam);
        for (auto& pt : lattice_points(p)) {
            std::vector<Rational> x(pt.begin(), pt.end());
            CHECK(in_weight_polytope(trop_weight_projection(x, chart, lam), lam));
        }
    }
}

TEST_CASE("pl transfer properties") {
    auto i0 = word_i0(4);
    DominantWeight lam({3, 2, 1, 0});
    auto crit = tropical_critical_point_slots(lam, i0);
    auto words = enumerate_reduced_words(4);

    // the critical point is fixed as a root-indexed map under every transfer
    auto byroot = tropical_critical_point(lam, i0);
    for (auto& w : words) {
        auto img = pl_transfer(crit, i0, w);
        auto roots = positive_root_sequence(w);
        for (int k = 0; k < 6; ++k) CHECK(img[k] == byroot.at(roots[k]));
    }

    // identity path
    CHECK(pl_transfer(crit, i0, i0) == crit);

    // tropical box-sum preservation per long move and roundtrips
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int t = 0; t < 500; ++t) {
        std::vector<Rational> pt;
        for (int k = 0; k < 6; ++k) pt.emplace_back(num(rng), den(rng));
        const ReducedWord& w1 = words[pick(rng)];
        const ReducedWord& w2 = words[pick(rng)];
        auto img = pl_transfer(pt, w1, w2);
        CHECK(pl_transfer(img, w2, w1) == pt);
        for (const Move& mv : available_moves(w1)) {
            if (mv.kind != Move::LongBraid) continue;
            auto mvd = trop_braid_move(pt, mv);
            int p = mv.pos - 1;
            CHECK(mvd[p] + mvd[p + 1] == pt[p + 1] + pt[p + 2]);      // beta side
            CHECK(mvd[p + 2] + mvd[p + 1] == pt[p + 1] + pt[p]);      // alpha side
        }
    }
}

TEST_CASE("membership consistency under transfer") {
    DominantWeight lam({2, 1, 0, -1});
    auto i0 = word_i0(4);
    TropPolytope p0 = polytope_hrep(PolytopeChart::IdealM, lam);
    auto words = enumerate_reduced_words(4);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(-4, 8), den(1, 2);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int t = 0; t < 200; ++t) {
        std::vector<Rational> pt;
        for (int k = 0; k < 6; ++k) pt.emplace_back(num(rng), den(rng));
        const ReducedWord& w = words[pick(rng)];
        auto img = pl_transfer(pt, i0, w);
        CHECK(ideal_polytope_member(img, w, lam) == p0.contains(pt));
    }
}

TEST_CASE("gelfand-tsetlin polytope and pattern counts") {
    CHECK(gt_pattern_count(DominantWeight({2, 1, -1})) == 15);
    CHECK(gt_pattern_count(DominantWeight({1, 0, 0})) == 3);
    CHECK(gt_pattern_count(DominantWeight({0, 0, 0, 0})) == 1);

    DominantWeight lam({2, 1, -1});
    TropPolytope g = polytope_hrep(PolytopeChart::VertexGT, lam);
    CHECK(g.dim == 3);
    CHECK(lattice_count(g) == 15);
    CHECK_THROWS_AS(gt_pattern_count(DominantWeight({Rational(1, 2), 0})), std::domain_error);
}

TEST_CASE("the i0 polytopes are unimodularly equivalent") {
    for (auto lam : {DominantWeight({2, 1, -1}), DominantWeight({3, 1, 0}),
                     DominantWeight({2, 1, 0, -1})}) {
        int n = lam.n();
        const int N = n * (n - 1) / 2;
        MonomialMap fwd = string_to_ideal_i0(n);
        // integer determinant +-1 via rational elimination
        std::vector<std::vector<Rational>> a(N, std::vector<Rational>(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) a[i][j] = fwd.rules[i][j];
        Rational det = 1;
        for (int col = 0; col < N; ++col) {
            int sel = -1;
            for (int r = col; r < N; ++r)
                if (a[r][col] != 0) {
                    sel = r;
                    break;
                }
            REQUIRE(sel >= 0);
            if (sel != col) {
                std::swap(a[sel], a[col]);
                det = -det;
            }
            det *= a[col][col];
            for (int r = col + 1; r < N; ++r) {
                if (a[r][col] == 0) continue;
                Rational f = a[r][col] / a[col][col];
                for (int c = col; c < N; ++c) a[r][c] -= f * a[col][c];
            }
        }
        CHECK((det == 1 || det == -1));

        // vertices map onto vertices under the valuation map
        TropPolytope ps = polytope_hrep(PolytopeChart::StringZ, lam);
        TropPolytope pm = polytope_hrep(PolytopeChart::IdealM, lam);
        auto map_pt = [&](const std::vector<Rational>& zeta) {
            std::vector<Rational> mu(N, 0);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) mu[i] += Rational(fwd.rules[i][j]) * zeta[j];
            return mu;
        };
        auto vs = polytope_vertices(ps);
        std::set<std::vector<Rational>> image;
        for (auto& v : vs) image.insert(map_pt(v));
        auto vm = polytope_vertices(pm);
        CHECK(image == std::set<std::vector<Rational>>(vm.begin(), vm.end()));
        CHECK(lattice_count(ps) == lattice_count(pm));
    }
}

TEST_CASE("boundedness detection") {
    DominantWeight lam({1, 0});
    TropPolytope p = polytope_hrep(PolytopeChart::IdealM, lam);
    CHECK(polytope_bounded(p));
    // dropping the upper bound leaves an unbounded ray
    TropPolytope q = p;
    q.ineqs.erase(q.ineqs.begin() + 1);
    CHECK(!polytope_bounded(q));
    CHECK_THROWS_AS(polytope_vertices(q), UnboundedError);
}
