#include <doctest.h>

#include <random>

#include "flagpoly/charts.hpp"
#include "flagpoly/network.hpp"

using namespace flagpoly;

namespace {

Matrix<Rational> mat(int n, std::initializer_list<Rational> xs) {
    Matrix<Rational> m(n, 0);
    auto it = xs.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = *it++;
    return m;
}

}  // namespace

TEST_CASE("chevalley generators") {
    Rational c(7, 2);
    auto y = chevalley(Chevalley::Y, 2, 1, c);
    CHECK(y == mat(2, {1, 0, c, 1}));
    auto tt = chevalley(Chevalley::T, 2, 1, c);
    CHECK(tt == mat(2, {c, 0, 0, Rational(2, 7)}));
    auto w0 = chevalley(Chevalley::W0Bar, 3, 1, Rational(1));
    CHECK(w0 == mat(3, {0, 0, 1, 0, -1, 0, 1, 0, 0}));
    CHECK_THROWS_AS(chevalley(Chevalley::X, 3, 3, Rational(1)), std::domain_error);

    // sbar_i = x_i(-1) y_i(1) x_i(-1)
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n - 1; ++i) {
            auto lhs = chevalley(Chevalley::SBar, n, i, Rational(1));
            auto rhs = chevalley(Chevalley::X, n, i, Rational(-1)) *
                       chevalley(Chevalley::Y, n, i, Rational(1)) *
                       chevalley(Chevalley::X, n, i, Rational(-1));
            CHECK(lhs == rhs);
        }

    // x_{-i}(z)^T = t_i(1/z) x_i(z)
    for (int i = 1; i <= 3; ++i) {
        Rational z(3, 5);
        Rational zinv = Rational(1) / z;
        auto lhs = chevalley(Chevalley::XMinus, 4, i, z).transpose();
        auto rhs = chevalley(Chevalley::T, 4, i, zinv) * chevalley(Chevalley::X, 4, i, z);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gauss ldu") {
    auto id = Matrix<Rational>::identity(3, Rational(1));
    auto f = gauss_ldu(id);
    CHECK(f.l == id);
    CHECK(f.d == id);
    CHECK(f.u == id);

    auto m = mat(2, {2, 1, 1, 1});
    auto g = gauss_ldu(m);
    CHECK(g.l == mat(2, {1, 0, Rational(1, 2), 1}));
    CHECK(g.d == mat(2, {2, 0, 0, Rational(1, 2)}));
    CHECK(g.u == mat(2, {1, Rational(1, 2), 0, 1}));
    CHECK(g.l * g.d * g.u == m);

    CHECK_THROWS_AS(gauss_ldu(mat(2, {0, 1, 1, 0})), NonGenericError);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(1, 9);
    for (int t = 0; t < 50; ++t) {
        Matrix<Rational> r(3, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.at(i, j) = Rational(c(rng), c(rng));
        try {
            auto ff = gauss_ldu(r);
            CHECK(ff.l * ff.d * ff.u == r);
        } catch (const NonGenericError&) {
        }
    }
}

TEST_CASE("diagonal factor of (w0bar A^T)^{-1} is the identity") {
    for (int n = 2; n <= 4; ++n)
        for (auto& w : enumerate_reduced_words(n)) {
            auto vt = VarTable::coords_and_params("z", w.length(), 0);
            auto u = x_minus_product(w, vt);
            RatFunc one = RatFunc::one(vt);
            auto w0 = chevalley(Chevalley::W0Bar, n, 1, one);
            auto b = inverse(w0 * u.transpose());
            auto f = gauss_ldu(b);
            for (int i = 0; i < n; ++i) CHECK(f.d.at(i, i) == one);
        }
}

TEST_CASE("golden minors of u1 and uT for n=4") {
    const int n = 4, N = 6;
    auto vt = VarTable::coords_and_params("z", N, 0);
    RatFunc like = RatFunc::one(vt);
    auto z = [&](int k) { return RatFunc::variable(vt, k - 1); };

    // u1 = x_{i'0}(z1, z4, z6, z2/z4, z5/z6, z3/z5)
    std::vector<RatFunc> weights = {z(1), z(4), z(6), z(2) / z(4), z(5) / z(6), z(3) / z(5)};
    auto i0p = word_i0p(n);
    Matrix<RatFunc> u1 = Matrix<RatFunc>::identity(n, like);
    std::vector<NetworkFactor<RatFunc>> u1f;
    for (int k = 0; k < N; ++k) {
        u1 = u1 * chevalley(Chevalley::X, n, i0p.letters[k], weights[k]);
        u1f.push_back({NetworkFactor<RatFunc>::X, i0p.letters[k], weights[k]});
    }
    CHECK(minor(u1, {1}, {4}) == z(3));
    CHECK(minor(u1, {1, 2, 3}, {2, 3, 4}) == z(1) * z(4) * z(6));

    auto u1net = network_from_factorization(n, u1f);
    CHECK(lgv_minor(u1net, {1}, {4}, like) == z(3));
    CHECK(lgv_minor(u1net, {1, 2, 3}, {2, 3, 4}, like) == z(1) * z(4) * z(6));
    CHECK(lgv_minor(u1net, {1, 2, 3, 4}, {1, 2, 3, 4}, like) == like);

    // uT via t-pair + x columns
    std::vector<NetworkFactor<RatFunc>> utf;
    auto i0 = word_i0(n);
    for (int m = N - 1; m >= 0; --m) {
        utf.push_back({NetworkFactor<RatFunc>::TPair, i0.letters[m], z(m + 1)});
        utf.push_back({NetworkFactor<RatFunc>::X, i0.letters[m], z(m + 1)});
    }
    auto utnet = network_from_factorization(n, utf);
    auto ut = x_minus_product(i0, vt).transpose();
    CHECK(lgv_minor(utnet, {1, 2}, {1, 4}, like) == like / (z(1) * z(4)));
    CHECK(lgv_minor(utnet, {1, 2}, {3, 4}, like) == like);
    CHECK(minor(ut, {1, 2}, {3, 4}) == like);
    CHECK(lgv_minor(utnet, {1, 2, 3, 4}, {1, 2, 3, 4}, like) == like);
    // the network matrix is u^T itself
    CHECK(network_matrix(n, utf, like) == ut);

    CHECK_THROWS_AS(minor(u1, {1, 2}, {1}), std::domain_error);
}

TEST_CASE("lgv equals determinant minors on random factorizations") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> c(1, 6), nn(2, 5), len(1, 8), kind(0, 1);
    for (int t = 0; t < 200; ++t) {
        int n = nn(rng);
        std::vector<NetworkFactor<Rational>> fs;
        int L = len(rng);
        for (int k = 0; k < L; ++k) {
            std::uniform_int_distribution<int> lvl(1, n - 1);
            Rational w(c(rng), c(rng));
            fs.push_back({kind(rng) ? NetworkFactor<Rational>::X : NetworkFactor<Rational>::TPair,
                          lvl(rng), w});
        }
        auto net = network_from_factorization(n, fs);
        auto m = network_matrix(n, fs, Rational(1));
        std::uniform_int_distribution<int> sz(1, n);
        int l = sz(rng);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> J(all.begin(), all.begin() + l);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> K(all.begin(), all.begin() + l);
        std::sort(J.begin(), J.end());
        std::sort(K.begin(), K.end());
        CHECK(lgv_minor(net, J, K, Rational(1)) == minor(m, J, K));
    }
}

TEST_CASE("network structure of the standard factorisations") {
    // single factor x_1(w) at n=2: one diagonal edge
    auto net1 = network_from_factorization<Rational>(2, {{NetworkFactor<Rational>::X, 1, 5}});
    REQUIRE(net1.columns.size() == 1);
    CHECK(net1.columns[0].diagonal);
    CHECK(net1.columns[0].diag_weight == 5);

    // u1 when n=4: six diagonal edges at heights 3,2,1,3,2,3
    auto vt = VarTable::coords_and_params("p", 6, 0);
    std::vector<NetworkFactor<RatFunc>> fs;
    auto i0p = word_i0p(4);
    for (int k = 0; k < 6; ++k)
        fs.push_back({NetworkFactor<RatFunc>::X, i0p.letters[k], RatFunc::variable(vt, k)});
    auto net = network_from_factorization(4, fs);
    std::vector<int> heights;
    for (auto& col : net.columns) {
        CHECK(col.diagonal);
        heights.push_back(col.level);
    }
    CHECK(heights == std::vector<int>{3, 2, 1, 3, 2, 3});

    // u^T when n=4: 18 weighted segments (6 diagonals + 6 torus pairs)
    std::vector<NetworkFactor<RatFunc>> utf;
    auto i0 = word_i0(4);
    for (int m = 5; m >= 0; --m) {
        utf.push_back({NetworkFactor<RatFunc>::TPair, i0.letters[m], RatFunc::variable(vt, m)});
        utf.push_back({NetworkFactor<RatFunc>::X, i0.letters[m], RatFunc::variable(vt, m)});
    }
    auto utnet = network_from_factorization(4, utf);
    int weighted = 0;
    for (auto& col : utnet.columns) weighted += col.diagonal ? 1 : 2;
    CHECK(weighted == 18);
}
