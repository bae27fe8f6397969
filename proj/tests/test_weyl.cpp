#include <doctest.h>

#include <random>

#include "flagpoly/polytope.hpp"
#include "flagpoly/reduced_word.hpp"

using namespace flagpoly;

TEST_CASE("reduced word enumeration") {
    auto w2 = enumerate_reduced_words(2);
    REQUIRE(w2.size() == 1);
    CHECK(w2[0].letters == std::vector<int>{1});

    auto w3 = enumerate_reduced_words(3);
    REQUIRE(w3.size() == 2);
    CHECK(w3[0].letters == std::vector<int>{1, 2, 1});
    CHECK(w3[1].letters == std::vector<int>{2, 1, 2});

    CHECK(enumerate_reduced_words(4).size() == 16);
    CHECK(enumerate_reduced_words(5).size() == 768);
    CHECK_THROWS_AS(enumerate_reduced_words(7), SizeLimitError);
    CHECK_THROWS_AS(enumerate_reduced_words(1), SizeLimitError);

    for (auto& w : enumerate_reduced_words(4)) {
        CHECK(w.length() == 6);
        CHECK(is_reduced_word_for_w0(4, w.letters));
    }
}

TEST_CASE("standard words") {
    CHECK(word_i0(4).letters == std::vector<int>{1, 2, 3, 1, 2, 1});
    CHECK(word_i0p(4).letters == std::vector<int>{3, 2, 1, 3, 2, 3});
    CHECK(word_i0p_op(4).letters == std::vector<int>{3, 2, 3, 1, 2, 3});
    CHECK(block_offset(4, 1) == 0);
    CHECK(block_offset(4, 2) == 3);
    CHECK(block_offset(4, 3) == 5);
}

TEST_CASE("positive root sequences") {
    auto seq3 = positive_root_sequence(word_i0(3));
    CHECK(seq3 == std::vector<PositiveRoot>{{1, 2}, {1, 3}, {2, 3}});

    auto seq = positive_root_sequence(ReducedWord(4, {1, 2, 3, 2, 1, 2}));
    CHECK(seq == std::vector<PositiveRoot>{{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 4}, {2, 3}});

    auto seq4 = positive_root_sequence(word_i0(4));
    CHECK(seq4 == std::vector<PositiveRoot>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    // alpha_ij sits at place s_i + j - i
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            CHECK(seq4[block_offset(4, i) + (j - i) - 1] == PositiveRoot(i, j));
}

TEST_CASE("root sequence is a bijection onto R+ and has the between property") {
    std::mt19937_64 rng(5);
    for (int n = 3; n <= 5; ++n) {
        auto words = enumerate_reduced_words(n);
        std::shuffle(words.begin(), words.end(), rng);
        int take = std::min<int>(500, static_cast<int>(words.size()));
        for (int t = 0; t < take; ++t) {
            auto seq = positive_root_sequence(words[t]);
            std::set<PositiveRoot> uniq(seq.begin(), seq.end());
            CHECK(static_cast<int>(uniq.size()) == n * (n - 1) / 2);
            // alpha + beta lies between alpha and beta
            std::map<PositiveRoot, int> pos;
            for (int k = 0; k < static_cast<int>(seq.size()); ++k) pos[seq[k]] = k;
            for (auto& a : seq)
                for (auto& b : seq) {
                    if (a.j != b.i) continue;
                    PositiveRoot sum(a.i, b.j);
                    int lo = std::min(pos[a], pos[b]), hi = std::max(pos[a], pos[b]);
                    CHECK(pos[sum] > lo);
                    CHECK(pos[sum] < hi);
                }
        }
    }
}

TEST_CASE("braid paths") {
    ReducedWord a(3, {1, 2, 1}), b(3, {2, 1, 2});
    auto path = braid_path(a, b);
    REQUIRE(path.size() == 1);
    CHECK(path[0].kind == Move::LongBraid);
    CHECK(path[0].pos == 1);
    CHECK(braid_path(a, a).empty());

    ReducedWord c(4, {1, 2, 3, 1, 2, 1}), d(4, {1, 2, 3, 2, 1, 2});
    auto p2 = braid_path(c, d);
    CHECK(!p2.empty());
    ReducedWord cur = c;
    for (auto& mv : p2) {
        cur = apply_move(cur, mv);  // the constructor revalidates reducedness
        CHECK(is_reduced_word_for_w0(4, cur.letters));
    }
    CHECK(cur == d);

    // deterministic: the same path twice
    auto p3 = braid_path(c, d);
    REQUIRE(p2.size() == p3.size());
    for (size_t i = 0; i < p2.size(); ++i) {
        CHECK(p2[i].kind == p3[i].kind);
        CHECK(p2[i].pos == p3[i].pos);
    }

    // random pairs replay correctly, n = 5
    auto w5 = enumerate_reduced_words(5);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<size_t> pick(0, w5.size() - 1);
    for (int t = 0; t < 20; ++t) {
        ReducedWord from = w5[pick(rng)], to = w5[pick(rng)];
        ReducedWord at = from;
        for (auto& mv : braid_path(from, to)) at = apply_move(at, mv);
        CHECK(at == to);
    }
}

TEST_CASE("weyl dimension") {
    CHECK(weyl_dimension(DominantWeight({0, 0, 0})) == 1);
    CHECK(weyl_dimension(DominantWeight({1, 0, 0})) == 3);
    CHECK(weyl_dimension(DominantWeight({2, 1, -1})) == 15);
    CHECK_THROWS_AS(weyl_dimension(DominantWeight({Rational(1, 2), 0})), std::domain_error);
    CHECK_THROWS_AS(DominantWeight({0, 1, 0}), std::domain_error);

    // equals the Gelfand-Tsetlin pattern count
    for (int n = 2; n <= 4; ++n)
        for (int a = 0; a <= 5; ++a)
            for (int b = 0; b <= a; ++b) {
                std::vector<Rational> comps;
                comps.push_back(a);
                for (int k = 2; k < n; ++k) comps.push_back(b);
                comps.push_back(0);
                DominantWeight lam(comps);
                CHECK(weyl_dimension(lam) == BigInt(gt_pattern_count_serial(lam)));
            }
}

TEST_CASE("dominant weight basics") {
    DominantWeight lam({2, 1, -1});
    CHECK(lam.ell() == Rational(2, 3));
    CHECK(lam.integral());
    CHECK(lam.strictly_decreasing());
    CHECK(!DominantWeight({1, 1, 0}).strictly_decreasing());
}
