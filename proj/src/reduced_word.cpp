#include "flagpoly/reduced_word.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace flagpoly {

ReducedWord::ReducedWord(int n_, std::vector<int> ls) : n(n_), letters(std::move(ls)) {
    if (n < 2) throw std::domain_error("ReducedWord needs n >= 2");
    int N = n * (n - 1) / 2;
    if (static_cast<int>(letters.size()) != N)
        throw std::domain_error("ReducedWord must have length n(n-1)/2");
    for (int l : letters)
        if (l < 1 || l > n - 1) throw std::domain_error("letter out of range");
    if (!is_reduced_word_for_w0(n, letters))
        throw std::domain_error("word does not multiply to w0");
}

ReducedWord word_i0(int n) {
    std::vector<int> ls;
    for (int len = n - 1; len >= 1; --len)
        for (int i = 1; i <= len; ++i) ls.push_back(i);
    return ReducedWord(n, ls);
}

ReducedWord word_i0p(int n) {
    std::vector<int> ls;
    for (int start = 1; start <= n - 1; ++start)
        for (int i = n - 1; i >= start; --i) ls.push_back(i);
    return ReducedWord(n, ls);
}

ReducedWord word_i0p_op(int n) {
    auto w = word_i0p(n);
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

std::vector<int> word_permutation(int n, const std::vector<int>& letters) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    for (int l : letters) std::swap(p[l - 1], p[l]);
    return p;
}

bool is_reduced_word_for_w0(int n, const std::vector<int>& letters) {
    if (static_cast<int>(letters.size()) != n * (n - 1) / 2) return false;
    auto p = word_permutation(n, letters);
    for (int i = 0; i < n; ++i)
        if (p[i] != n - i) return false;
    return true;  // length == l(w0) and product == w0 implies reduced
}

std::vector<ReducedWord> enumerate_reduced_words(int n) {
    if (n < 2 || n > 6) throw SizeLimitError("enumerate_reduced_words supports 2 <= n <= 6");
    // peel letters off w0 from the left: w0 = s_i * w' with l(w') = l(w0)-1
    // iff i is a left descent of the running permutation.
    std::vector<ReducedWord> out;
    std::vector<int> w0(n);
    for (int i = 0; i < n; ++i) w0[i] = n - i;
    std::vector<int> acc;
    // left descent of w at i <=> w^{-1}(i) > w^{-1}(i+1); equivalently use the
    // right-descent recursion on w^{-1}; w0 is an involution so both agree.
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& perm) {
        bool any = false;
        for (int i = 1; i <= n - 1; ++i) {
            // s_i * perm swaps the VALUES i, i+1
            int pi = 0, pj = 0;
            for (int k = 0; k < n; ++k) {
                if (perm[k] == i) pi = k;
                if (perm[k] == i + 1) pj = k;
            }
            if (pi > pj) {  // left descent
                any = true;
                std::swap(perm[pi], perm[pj]);
                acc.push_back(i);
                rec(perm);
                acc.pop_back();
                std::swap(perm[pi], perm[pj]);
            }
        }
        if (!any) out.emplace_back(ReducedWord(n, acc));
    };
    rec(w0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<PositiveRoot> positive_root_sequence(const ReducedWord& w) {
    std::vector<PositiveRoot> seq;
    std::vector<int> perm(w.n);
    for (int i = 0; i < w.n; ++i) perm[i] = i + 1;  // running s_{i_1}...s_{i_{j-1}}
    for (int j = 0; j < w.length(); ++j) {
        int l = w.letters[j];
        int a = perm[l - 1], b = perm[l];
        seq.emplace_back(std::min(a, b), std::max(a, b));
        std::swap(perm[l - 1], perm[l]);
    }
    return seq;
}

ReducedWord apply_move(const ReducedWord& w, const Move& m) {
    auto ls = w.letters;
    int p = m.pos - 1;
    if (m.kind == Move::LongBraid) {
        if (p < 0 || p + 2 >= static_cast<int>(ls.size()) + 1)
            throw std::domain_error("long braid move out of range");
        int a = ls[p], b = ls[p + 1];
        if (!(ls[p + 2] == a && std::abs(a - b) == 1))
            throw std::domain_error("invalid long braid move");
        ls[p] = b;
        ls[p + 1] = a;
        ls[p + 2] = b;
    } else {
        if (p < 0 || p + 1 >= static_cast<int>(ls.size()))
            throw std::domain_error("commutation move out of range");
        int a = ls[p], b = ls[p + 1];
        if (std::abs(a - b) < 2) throw std::domain_error("invalid commutation move");
        std::swap(ls[p], ls[p + 1]);
    }
    return ReducedWord(w.n, ls);
}

std::vector<Move> available_moves(const ReducedWord& w) {
    std::vector<Move> out;
    const auto& ls = w.letters;
    for (int p = 0; p + 1 < static_cast<int>(ls.size()); ++p) {
        if (std::abs(ls[p] - ls[p + 1]) >= 2) out.push_back({Move::Commutation, p + 1});
        if (p + 2 < static_cast<int>(ls.size()) && ls[p] == ls[p + 2] &&
            std::abs(ls[p] - ls[p + 1]) == 1)
            out.push_back({Move::LongBraid, p + 1});
    }
    return out;
}

std::vector<Move> braid_path(const ReducedWord& from, const ReducedWord& to) {
    if (from.n != to.n) throw std::domain_error("braid_path needs words of the same n");
    if (from == to) return {};
    std::map<std::vector<int>, std::pair<std::vector<int>, Move>> parent;
    std::queue<ReducedWord> q;
    q.push(from);
    parent[from.letters] = {from.letters, Move{Move::Commutation, 0}};
    while (!q.empty()) {
        ReducedWord cur = q.front();
        q.pop();
        // deterministic order: neighbours sorted by resulting word
        std::vector<std::pair<ReducedWord, Move>> nbrs;
        for (const Move& m : available_moves(cur)) nbrs.emplace_back(apply_move(cur, m), m);
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [nb, m] : nbrs) {
            if (parent.count(nb.letters)) continue;
            parent[nb.letters] = {cur.letters, m};
            if (nb == to) {
                std::vector<Move> path;
                std::vector<int> at = nb.letters;
                while (at != from.letters) {
                    auto& [prev, mv] = parent[at];
                    path.push_back(mv);
                    at = prev;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(nb);
        }
    }
    throw std::runtime_error("word graph disconnected (unreachable)");
}

DominantWeight::DominantWeight(std::vector<Rational> c) : comps(std::move(c)) {
    if (comps.size() < 2) throw std::domain_error("weight needs n >= 2 components");
    for (size_t i = 0; i + 1 < comps.size(); ++i)
        if (comps[i] < comps[i + 1])
            throw std::domain_error("weight must be weakly decreasing (dominant)");
}

Rational DominantWeight::ell() const {
    Rational s = 0;
    for (auto& c : comps) s += c;
    return s / n();
}

bool DominantWeight::integral() const {
    for (auto& c : comps)
        if (!is_integer(c)) return false;
    return true;
}

bool DominantWeight::strictly_decreasing() const {
    for (size_t i = 0; i + 1 < comps.size(); ++i)
        if (!(comps[i] > comps[i + 1])) return false;
    return true;
}

BigInt weyl_dimension(const DominantWeight& lambda) {
    if (!lambda.integral()) throw std::domain_error("weyl_dimension needs integral lambda");
    int n = lambda.n();
    Rational dim = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            dim *= (lambda.comps[i - 1] - lambda.comps[j - 1] + (j - i)) / Rational(j - i);
    if (!is_integer(dim)) throw std::logic_error("weyl dimension not integral");
    return boost::multiprecision::numerator(dim);
}

}  // namespace flagpoly
