#pragma once

#include <optional>
#include <set>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& w) : std::runtime_error(w) {}
};

// Positive root alpha_{ij} = eps_i - eps_j, 1 <= i < j <= n.
struct PositiveRoot {
    int i = 0, j = 0;
    PositiveRoot() = default;
    PositiveRoot(int a, int b) : i(a), j(b) {
        if (!(0 < a && a < b)) throw std::domain_error("positive root needs i < j");
    }
    bool operator==(const PositiveRoot& o) const { return i == o.i && j == o.j; }
    bool operator<(const PositiveRoot& o) const { return i != o.i ? i < o.i : j < o.j; }
};

// Reduced expression s_{i_1}...s_{i_N} for the longest element of S_n,
// stored 1-indexed. N = n(n-1)/2 always.
struct ReducedWord {
    int n = 2;
    std::vector<int> letters;

    ReducedWord() = default;
    ReducedWord(int n_, std::vector<int> ls);

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const ReducedWord& o) const { return n == o.n && letters == o.letters; }
    bool operator<(const ReducedWord& o) const { return letters < o.letters; }
};

// s_k = sum_{j=1}^{k-1} (n - j); the offset of the k-th letter block of i0.
inline int block_offset(int n, int k) {
    int s = 0;
    for (int j = 1; j <= k - 1; ++j) s += n - j;
    return s;
}

ReducedWord word_i0(int n);      // (1,2,...,n-1, 1,2,...,n-2, ..., 1,2, 1)
ReducedWord word_i0p(int n);     // (n-1,...,1, n-1,...,2, ..., n-1)
ReducedWord word_i0p_op(int n);  // reverse of word_i0p

// Applies the word to the identity permutation; result[p] is the label ending
// at position p. Used to validate reducedness (product must be w0).
std::vector<int> word_permutation(int n, const std::vector<int>& letters);
bool is_reduced_word_for_w0(int n, const std::vector<int>& letters);

// All reduced words for w0, deduplicated. Guarded to 2 <= n <= 6.
std::vector<ReducedWord> enumerate_reduced_words(int n);

// Root ordering induced by a reduced word: alpha^i_j = s_{i_1}...s_{i_{j-1}} alpha_{i_j}.
std::vector<PositiveRoot> positive_root_sequence(const ReducedWord& w);

// A braid-move rewriting step at 1-based position `pos`:
// long move swaps letters (a,b,a) -> (b,a,b) at pos..pos+2, |a-b| = 1;
// commutation swaps (a,b) -> (b,a) at pos..pos+1, |a-b| >= 2.
struct Move {
    enum Kind { LongBraid, Commutation } kind;
    int pos;
};

ReducedWord apply_move(const ReducedWord& w, const Move& m);
std::vector<Move> available_moves(const ReducedWord& w);

// BFS path in the word graph, deterministic (lexicographically smallest
// neighbour explored first).
std::vector<Move> braid_path(const ReducedWord& from, const ReducedWord& to);

// Weakly decreasing weight (lambda_1 >= ... >= lambda_n).
struct DominantWeight {
    std::vector<Rational> comps;

    DominantWeight() = default;
    explicit DominantWeight(std::vector<Rational> c);

    int n() const { return static_cast<int>(comps.size()); }
    Rational ell() const;  // (1/n) sum lambda_i
    bool integral() const;
    bool strictly_decreasing() const;
};

// dim V_lambda for integral dominant lambda, by the product formula
// prod_{i<j} (lambda_i - lambda_j + j - i)/(j - i).
BigInt weyl_dimension(const DominantWeight& lambda);

}  // namespace flagpoly
