#include "flagpoly/arrangement.hpp"

namespace flagpoly {

Arrangement build_arrangement(const ReducedWord& w) {
    const int n = w.n;
    Arrangement arr;
    arr.word = w;
    std::vector<int> pos(n);  // pos[p] = label of the strand at height p+1
    for (int p = 0; p < n; ++p) pos[p] = p + 1;

    auto labels_below = [&](int h) {  // labels at heights 1..h
        std::set<int> s;
        for (int p = 0; p < h; ++p) s.insert(pos[p]);
        return s;
    };

    // chambers: per band h (0..n), segments delimited by crossings at level h
    // (band h sits between wire h and wire h+1, so only level-h crossings
    // change its label)
    std::vector<int> band_start(n + 1, 0);
    std::vector<std::set<int>> band_label(n + 1);
    for (int h = 0; h <= n; ++h) band_label[h] = labels_below(h);

    for (int k = 0; k < w.length(); ++k) {
        int l = w.letters[k];
        ArrCrossing c;
        c.pos = k + 1;
        c.level = l;
        c.below = labels_below(l - 1);
        c.left = labels_below(l);
        c.above = labels_below(l + 1);
        std::swap(pos[l - 1], pos[l]);
        c.right = labels_below(l);
        arr.crossings.push_back(c);

        arr.chambers.push_back({l, band_start[l], k + 1, band_label[l]});
        band_start[l] = k + 1;
        band_label[l] = c.right;
    }
    for (int h = 0; h <= n; ++h)
        arr.chambers.push_back({h, band_start[h], w.length() + 1, band_label[h]});
    return arr;
}

std::set<int> chamber_pair_label_i0(int n, int k, int a) {
    (void)n;
    std::set<int> s;
    for (int v = k + 1; v <= k + a; ++v) s.insert(v);
    return s;
}

std::set<int> chamber_pair_label_i0p_op(int n, int k, int a) {
    std::set<int> s;
    for (int v = 1; v <= k; ++v) s.insert(v);
    if (k + a != n)
        for (int v = k + a + 1; v <= n; ++v) s.insert(v);
    return s;
}

}  // namespace flagpoly
