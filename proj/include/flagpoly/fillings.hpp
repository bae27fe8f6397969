#pragma once

#include "flagpoly/quiver.hpp"

namespace flagpoly {

class FillingError : public std::runtime_error {
public:
    explicit FillingError(const std::string& w) : std::runtime_error(w) {}
};

// Triangular array {n_ij >= 0, 1 <= i < j <= n} with the max-relations
// n_ij = max(n_{i+1,j}, n_{i,j-1}) for j - i >= 2.
struct IdealFilling {
    int n = 2;
    std::map<std::pair<int, int>, Rational> entries;

    const Rational& at(int i, int j) const { return entries.at({i, j}); }
    Rational& at(int i, int j) { return entries[{i, j}]; }

    // the n-1 entries n_{k,k+1} determine an ideal filling
    static IdealFilling from_first_diagonal(const std::vector<Rational>& diag);
    bool operator==(const IdealFilling& o) const { return n == o.n && entries == o.entries; }
};

bool validate_filling(const IdealFilling& f);

// The unique ideal filling with sum n_ij alpha_ij + ell sum eps_i = lambda,
// found by enumerating weak orderings of the first diagonal and solving the
// per-case linear system exactly.
IdealFilling filling_for_weight(const DominantWeight& lambda);

// All admissible solutions of the case enumeration (deduplicated); used by
// the uniqueness property test.
std::vector<IdealFilling> filling_candidates(const DominantWeight& lambda);

// Valuation data of the quiver at a tropical critical point.
struct TropQuiverPoint {
    int n = 2;
    std::map<std::pair<int, int>, Rational> delta;   // vertex valuations, key (row, col)
    std::map<std::string, Rational> rho;             // arrow valuations by arrow name
    std::map<std::pair<int, int>, Rational> pi;      // min incoming per dot vertex
};

// delta_{v_{ji}} = H^h_ij - H^v_ij + ell; arrow valuations are differences;
// the tropical critical conditions are verified to hold.
TropQuiverPoint filling_to_trop_point(const IdealFilling& f, const DominantWeight& lambda);

// n_ij = pi(v_{ji}); throws FillingError when the tropical critical
// conditions fail.
IdealFilling trop_point_to_filling(const TropQuiverPoint& p);

bool trop_critical_conditions_hold(const TropQuiverPoint& p);

// Root-indexed coordinates of the tropical critical point in the ideal chart
// of `word` (equal to the filling values for every word).
std::map<PositiveRoot, Rational> tropical_critical_point(const DominantWeight& lambda,
                                                         const ReducedWord& word);

// Slot-indexed coordinates for a particular word.
std::vector<Rational> tropical_critical_point_slots(const DominantWeight& lambda,
                                                    const ReducedWord& word);

}  // namespace flagpoly
