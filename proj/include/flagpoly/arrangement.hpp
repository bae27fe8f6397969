#pragma once

#include <set>

#include "flagpoly/matrix.hpp"
#include "flagpoly/network.hpp"
#include "flagpoly/reduced_word.hpp"

namespace flagpoly {

// Pseudoline arrangement of a reduced word. Strands are numbered bottom to
// top on the left; the crossing for letter k happens at level i_k; each
// chamber is labelled by the strands passing below it.
struct ArrCrossing {
    int pos;    // 1-based position in the word
    int level;  // i_pos
    std::set<int> left, right, above, below;  // labels of surrounding chambers
};

struct ArrChamber {
    int band;        // chamber lies between levels band and band+1 (0 = below all)
    int start, end;  // crossing positions delimiting it (0 and N+1 at the borders)
    std::set<int> label;
};

struct Arrangement {
    ReducedWord word;
    std::vector<ArrCrossing> crossings;
    std::vector<ArrChamber> chambers;

    std::set<std::set<int>> chamber_labels() const {
        std::set<std::set<int>> out;
        for (auto& c : chambers) out.insert(c.label);
        return out;
    }
};

Arrangement build_arrangement(const ReducedWord& w);

// Chamber Ansatz factorisation parameters: for each crossing k the quotient
// t_k = A_k D_k / (B_k C_k) of the four surrounding flag minors of `target`.
// The flag B = target * w0bar * B_+ then equals y_{i_1}(t_1)...y_{i_N}(t_N) B_+.
template <class R>
std::vector<R> ansatz_factorize(const Matrix<R>& target, const ReducedWord& w);

// Same parameters with minors evaluated through the planar network of a
// known factorisation (canonically subtraction-free).
template <class R>
std::vector<R> ansatz_factorize_network(const PlanarNetwork<R>& net, const ReducedWord& w,
                                        const R& like);

struct MonomialityReport {
    bool all_monomial = true;
    // one entry per chamber label: label, term count, rendered value
    struct Entry {
        std::set<int> label;
        int terms;
        std::string value;
    };
    std::vector<Entry> u1_minors, ut_minors;
};

// Evaluates every chamber minor of u1 (word i0) and u^T (word i'0^op)
// through lgv_minor and reports whether each is a single Laurent monomial.
MonomialityReport chamber_minor_monomiality_check(int n);

// (k,a) chamber labels used in the coordinate-change bookkeeping.
std::set<int> chamber_pair_label_i0(int n, int k, int a);        // {k+1..k+a}
std::set<int> chamber_pair_label_i0p_op(int n, int k, int a);    // {1..k} (+ {k+a+1..n})

// ---- implementation of the templated parts ----

template <class R>
std::vector<R> ansatz_factorize(const Matrix<R>& target, const ReducedWord& w) {
    Arrangement arr = build_arrangement(w);
    auto flag_minor = [&](const std::set<int>& label) -> R {
        std::vector<int> rows, cols(label.begin(), label.end());
        for (int r = 1; r <= static_cast<int>(label.size()); ++r) rows.push_back(r);
        return minor(target, rows, cols);
    };
    std::vector<R> out;
    for (const auto& c : arr.crossings) {
        R a = flag_minor(c.above), d = flag_minor(c.below);
        R b = flag_minor(c.left), cc = flag_minor(c.right);
        if (RingOps<R>::is_zero(b) || RingOps<R>::is_zero(cc))
            throw NonGenericError("chamber minor vanishes in Chamber Ansatz");
        out.push_back(RingOps<R>::div(RingOps<R>::mul(a, d), RingOps<R>::mul(b, cc)));
    }
    return out;
}

template <class R>
std::vector<R> ansatz_factorize_network(const PlanarNetwork<R>& net, const ReducedWord& w,
                                        const R& like) {
    Arrangement arr = build_arrangement(w);
    auto flag_minor = [&](const std::set<int>& label) -> R {
        std::vector<int> rows, cols(label.begin(), label.end());
        for (int r = 1; r <= static_cast<int>(label.size()); ++r) rows.push_back(r);
        return lgv_minor(net, rows, cols, like);
    };
    std::vector<R> out;
    for (const auto& c : arr.crossings) {
        R a = flag_minor(c.above), d = flag_minor(c.below);
        R b = flag_minor(c.left), cc = flag_minor(c.right);
        if (RingOps<R>::is_zero(b) || RingOps<R>::is_zero(cc))
            throw NonGenericError("chamber minor vanishes in Chamber Ansatz");
        out.push_back(RingOps<R>::div(RingOps<R>::mul(a, d), RingOps<R>::mul(b, cc)));
    }
    return out;
}

}  // namespace flagpoly
