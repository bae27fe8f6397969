#pragma once

#include "flagpoly/matrix.hpp"

namespace flagpoly {

// Planar acyclic network on n horizontal levels, one column per factor:
// an x_i(w) factor contributes a diagonal edge from level i up to level i+1
// of weight w; a t_i(1/w) factor weights the level-i segment by 1/w and the
// level-(i+1) segment by w. Sources/sinks are numbered bottom to top.
template <class R>
struct PlanarNetwork {
    struct Column {
        bool diagonal;       // otherwise a torus weight pair
        int level;           // 1-based
        R diag_weight;       // diagonal case
        R low_weight, up_weight;  // torus case: level i, level i+1
    };
    int n = 0;
    std::vector<Column> columns;
};

template <class R>
struct NetworkFactor {
    enum Kind { X, TPair } kind;  // TPair means the factor t_i(1/w)
    int level;
    R weight;  // w
};

class UnsupportedFactorError : public std::runtime_error {
public:
    explicit UnsupportedFactorError(const std::string& w) : std::runtime_error(w) {}
};

template <class R>
PlanarNetwork<R> network_from_factorization(int n, const std::vector<NetworkFactor<R>>& factors) {
    PlanarNetwork<R> net;
    net.n = n;
    for (const auto& f : factors) {
        if (f.level < 1 || f.level > n - 1) throw std::domain_error("factor level out of range");
        typename PlanarNetwork<R>::Column col;
        col.level = f.level;
        if (f.kind == NetworkFactor<R>::X) {
            col.diagonal = true;
            col.diag_weight = f.weight;
        } else if (f.kind == NetworkFactor<R>::TPair) {
            col.diagonal = false;
            col.low_weight = RingOps<R>::div(RingOps<R>::one(f.weight), f.weight);
            col.up_weight = f.weight;
        } else {
            throw UnsupportedFactorError("only x_i(w) and t_i(1/w) factors are supported");
        }
        net.columns.push_back(std::move(col));
    }
    return net;
}

// Matrix of the factor product, for cross-checking lgv_minor against plain
// determinant minors.
template <class R>
Matrix<R> network_matrix(int n, const std::vector<NetworkFactor<R>>& factors, const R& like) {
    Matrix<R> m = Matrix<R>::identity(n, like);
    for (const auto& f : factors) {
        if (f.kind == NetworkFactor<R>::X) {
            m = m * chevalley(Chevalley::X, n, f.level, f.weight);
        } else {
            m = m * chevalley(Chevalley::T, n, f.level,
                              RingOps<R>::div(RingOps<R>::one(f.weight), f.weight));
        }
    }
    return m;
}

// Sum over vertex-disjoint path families from sources J to sinks K of the
// product of edge weights. All diagonal edges go up, so the family is
// order-preserving and a frontier DP over columns enumerates it exactly.
// Returns the zero ring element when no family exists (the empty sum).
template <class R>
R lgv_minor(const PlanarNetwork<R>& net, const std::vector<int>& sources,
            const std::vector<int>& sinks, const R& like) {
    if (sources.size() != sinks.size()) throw std::domain_error("lgv_minor needs |J| == |K|");
    const R zero = RingOps<R>::zero(like);
    const R one = RingOps<R>::one(like);
    for (int s : sources)
        if (s < 1 || s > net.n) throw std::domain_error("source out of range");
    for (int s : sinks)
        if (s < 1 || s > net.n) throw std::domain_error("sink out of range");

    auto mask_of = [](const std::vector<int>& levels) {
        unsigned m = 0;
        for (int l : levels) m |= 1u << (l - 1);
        return m;
    };
    unsigned start = mask_of(sources), goal = mask_of(sinks);
    if (static_cast<int>(sources.size()) !=
        __builtin_popcount(start))  // repeated labels cannot be disjoint
        return zero;

    std::map<unsigned, R> dp;
    dp[start] = one;
    for (const auto& col : net.columns) {
        std::map<unsigned, R> next;
        const int lvl = col.level;  // 1-based
        for (auto& [mask, w] : dp) {
            if (col.diagonal) {
                bool at = mask & (1u << (lvl - 1));
                bool above = mask & (1u << lvl);
                // stay put: allowed always (the diagonal is simply unused)
                auto acc = next.find(mask);
                if (acc == next.end())
                    next.emplace(mask, w);
                else
                    acc->second = RingOps<R>::add(acc->second, w);
                // one path takes the diagonal; the endpoint vertices must be
                // free of horizontal traffic, i.e. level i occupied, i+1 not
                if (at && !above) {
                    unsigned nm = (mask & ~(1u << (lvl - 1))) | (1u << lvl);
                    R nw = RingOps<R>::mul(w, col.diag_weight);
                    auto it = next.find(nm);
                    if (it == next.end())
                        next.emplace(nm, nw);
                    else
                        it->second = RingOps<R>::add(it->second, nw);
                }
            } else {
                R nw = w;
                if (mask & (1u << (lvl - 1))) nw = RingOps<R>::mul(nw, col.low_weight);
                if (mask & (1u << lvl)) nw = RingOps<R>::mul(nw, col.up_weight);
                auto it = next.find(mask);
                if (it == next.end())
                    next.emplace(mask, nw);
                else
                    it->second = RingOps<R>::add(it->second, nw);
            }
        }
        dp = std::move(next);
    }
    auto it = dp.find(goal);
    return it == dp.end() ? zero : it->second;
}

}  // namespace flagpoly
