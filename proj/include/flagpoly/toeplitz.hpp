#pragma once

#include "flagpoly/charts.hpp"
#include "flagpoly/fillings.hpp"

namespace flagpoly {

// Lower unitriangular product of y-factors over the leading-term field,
// together with the root-indexed coordinates that produced it.
struct ToeplitzWitness {
    ReducedWord word;
    std::map<PositiveRoot, PosLead> m;
    Matrix<PosLeadZ> product;
};

// y_{i_1}(1/m_1)...y_{i_N}(1/m_N) with slot-indexed coordinates.
Matrix<PosLeadZ> y_factor_product(const ReducedWord& word, const std::vector<PosLead>& m);

ToeplitzWitness make_witness(const ReducedWord& word, const std::vector<PosLead>& m);

// Lower unitriangular and constant along every subdiagonal (valuation and
// coefficient both).
bool is_toeplitz(const Matrix<PosLeadZ>& m);

// n=3 family: free m_{a12}, m_{a23}; m_{a13} = (1/m_{a12} + 1/m_{a23})^{-1}
// makes the product Toeplitz by construction.
ToeplitzWitness toeplitz_family_n3(const Rational& mu1, const Rational& mu3, const Rational& c1,
                                   const Rational& c3);

struct TheoremReport {
    bool applicable = false;  // is_toeplitz held
    bool filling_valid = false;
    IdealFilling filling;
    std::string detail;
};

// Checks that the valuations of a Toeplitz witness form an ideal filling.
TheoremReport theorem_check(const ToeplitzWitness& w);

// n=4 family for the word i0: free coordinates m1, m4, m6; the remaining
// three are the unique solution of the Toeplitz constraints over the series
// field, which happens to be subtraction-free:
//   1/m3 = A,  1/m2 = S A / D,  1/m5 = (a4+a6) A / D
// with a_k = 1/m_k, S = a1+a4, A = a1+a4+a6, D = a1+2a4+a6. Witnesses built
// this way extend to genuine series Toeplitz matrices, so the theorem
// applies to them; their valuations form the ideal filling with first
// diagonal (mu_1, mu_4, mu_6) automatically.
ToeplitzWitness toeplitz_family_n4(const PosLead& m1, const PosLead& m4, const PosLead& m6);

// Verifies symbolically (over the rational-function field in a1, a4, a6)
// that the family satisfies all subdiagonal equalities identically and that
// it is the unique solution: the constraints are linear in a2 with the
// positive pivot D, so no other series solution exists.
bool toeplitz_family_n4_is_exhaustive();

// Constraint search for n=4 witnesses: valuations from an ideal filling,
// leading coefficients solved per min-attaining case; every returned witness
// has been re-verified Toeplitz over PosLead. Leading-term Toeplitz
// consistency is necessary for (not equivalent to) the series hypothesis;
// genuine witnesses come from toeplitz_family_n4.
std::vector<ToeplitzWitness> toeplitz_search_n4(int samples, unsigned seed);

// Grid sweep: for every ideal filling on the integer grid {0..maxval}^3 of
// first diagonals, the family witness at t^mu coefficients is Toeplitz and
// passes the theorem check. Returns false on any failure.
bool toeplitz_filling_grid_check_n4(int maxval);

}  // namespace flagpoly
