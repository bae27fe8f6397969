#include "flagpoly/arrangement.hpp"

namespace flagpoly {

namespace {

// u^T = t_{i_N}(1/z_N) x_{i_N}(z_N) ... t_{i_1}(1/z_1) x_{i_1}(z_1)
std::vector<NetworkFactor<RatFunc>> ut_factors(const ReducedWord& w, const VarTablePtr& vt) {
    std::vector<NetworkFactor<RatFunc>> fs;
    for (int m = w.length() - 1; m >= 0; --m) {
        RatFunc zm = RatFunc::variable(vt, m);
        fs.push_back({NetworkFactor<RatFunc>::TPair, w.letters[m], zm});
        fs.push_back({NetworkFactor<RatFunc>::X, w.letters[m], zm});
    }
    return fs;
}

std::vector<NetworkFactor<RatFunc>> x_factors(const ReducedWord& w, const VarTablePtr& vt) {
    std::vector<NetworkFactor<RatFunc>> fs;
    for (int m = 0; m < w.length(); ++m)
        fs.push_back({NetworkFactor<RatFunc>::X, w.letters[m], RatFunc::variable(vt, m)});
    return fs;
}

}  // namespace

MonomialityReport chamber_minor_monomiality_check(int n) {
    if (n > 6) throw SizeLimitError("monomiality check supports n <= 6");
    MonomialityReport rep;
    const int N = n * (n - 1) / 2;

    auto record = [&rep](std::vector<MonomialityReport::Entry>& bucket, const std::set<int>& label,
                         const RatFunc& value) {
        int terms = value.den_is_one() ? value.num().term_count()
                                       : value.num().term_count() + value.den().term_count();
        bool mono = value.den_is_one() && value.num().is_monomial();
        bucket.push_back({label, terms, value.str()});
        if (!mono) rep.all_monomial = false;
    };

    {  // u^T against the arrangement for i'_0^op
        auto vt = VarTable::coords_and_params("z", N, 0);
        RatFunc like = RatFunc::one(vt);
        auto net = network_from_factorization(n, ut_factors(word_i0(n), vt));
        Arrangement arr = build_arrangement(word_i0p_op(n));
        for (auto& label : arr.chamber_labels()) {
            if (label.empty()) continue;
            std::vector<int> rows, cols(label.begin(), label.end());
            for (int r = 1; r <= static_cast<int>(label.size()); ++r) rows.push_back(r);
            record(rep.ut_minors, label, lgv_minor(net, rows, cols, like));
        }
    }
    {  // u_1 against the arrangement for i_0
        auto vt = VarTable::coords_and_params("p", N, 0);
        RatFunc like = RatFunc::one(vt);
        auto net = network_from_factorization(n, x_factors(word_i0p(n), vt));
        Arrangement arr = build_arrangement(word_i0(n));
        for (auto& label : arr.chamber_labels()) {
            if (label.empty()) continue;
            std::vector<int> rows, cols(label.begin(), label.end());
            for (int r = 1; r <= static_cast<int>(label.size()); ++r) rows.push_back(r);
            record(rep.u1_minors, label, lgv_minor(net, rows, cols, like));
        }
    }
    return rep;
}

}  // namespace flagpoly
