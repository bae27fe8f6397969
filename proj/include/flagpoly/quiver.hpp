#pragma once

#include "flagpoly/poslead.hpp"
#include "flagpoly/reduced_word.hpp"
#include "flagpoly/subfree.hpp"

namespace flagpoly {

class DecorationError : public std::runtime_error {
public:
    explicit DecorationError(const std::string& w) : std::runtime_error(w) {}
};

// Vertex v_{ij}, 1 <= j <= i <= n; stars are the v_{ii}.
struct QVertex {
    int i = 0, j = 0;
    bool operator==(const QVertex& o) const { return i == o.i && j == o.j; }
    bool operator<(const QVertex& o) const { return i != o.i ? i < o.i : j < o.j; }
    bool is_star() const { return i == j; }
};

// Vertical a_{ij}: v_{i+1,j} -> v_{ij} (j <= i <= n-1).
// Horizontal b_{ij}: v_{ij} -> v_{i,j-1} (2 <= j <= i <= n).
struct QArrow {
    bool vertical;
    int i, j;
    QVertex head() const { return vertical ? QVertex{i, j} : QVertex{i, j - 1}; }
    QVertex tail() const { return vertical ? QVertex{i + 1, j} : QVertex{i, j}; }
    std::string name() const {
        return (vertical ? "a" : "b") + std::to_string(i) + std::to_string(j);
    }
};

struct Quiver {
    int n;
    std::vector<QArrow> arrows;
    std::vector<QVertex> dot_vertices() const;
    std::vector<const QArrow*> incoming(const QVertex& v) const;
    std::vector<const QArrow*> outgoing(const QVertex& v) const;
};

Quiver build_quiver(int n);

enum class ChartKind { StringZ, IdealM };

// Monomial value on every arrow; star vertices carry d_i. Box and star
// relations hold identically as monomials by construction (and are tested).
struct Decoration {
    Quiver quiver;
    ChartKind chart;
    VarTablePtr vt;  // z_1..z_N or m_1..m_N followed by d_1..d_n
    std::map<std::string, LaurentMonomial> arrow_values;

    const LaurentMonomial& value(const QArrow& a) const { return arrow_values.at(a.name()); }
};

Decoration decorate(const Quiver& q, ChartKind chart);

// Sum of all arrow monomials; equals the superpotential of the chart.
LaurentPoly quiver_superpotential(const Decoration& dec);
std::vector<LaurentMonomial> superpotential_monomials(const Decoration& dec);

struct TorusMaps {
    std::vector<LaurentMonomial> kappa;                 // highest weight (= d)
    std::vector<LaurentMonomial> gamma;                 // weight torus values t_1..t_n
    std::map<std::string, LaurentMonomial> vertex_x;    // reconstructed x_v, key "i,j"
};

// Reconstructs vertex values from x_{v_nn} = d_n by integrating arrow ratios;
// path independence is the box-relation invariant, and x_{v_ii} = d_i is
// verified (throws DecorationError otherwise).
TorusMaps torus_maps(const Decoration& dec);

// Per dot vertex: the incoming and outgoing arrow monomial sums whose
// equality is the critical point condition.
struct CriticalCondition {
    QVertex vertex;
    std::vector<LaurentMonomial> incoming, outgoing;
};
std::vector<CriticalCondition> critical_conditions(const Decoration& dec);

// Numeric PosLead data for the ideal-chart quiver at given (d, m).
struct OutgoingSumReport {
    bool preconditions_hold = false;  // critical conditions at every dot vertex
    bool identity_holds = false;      // outgoing sum == m_{s_k + i - k} everywhere
    std::string detail;
};

OutgoingSumReport outgoing_sum_check(const Decoration& dec, const std::vector<PosLead>& m,
                                     const std::vector<PosLead>& d);

// Exact PosLead solution of the n=3 critical point conditions in the fibre
// over d = t^lambda. Rational leading coefficients exist only off the tie
// lambda_1-lambda_2 == lambda_2-lambda_3; the tie raises NonRationalError.
class NonRationalError : public std::runtime_error {
public:
    explicit NonRationalError(const std::string& w) : std::runtime_error(w) {}
};
std::vector<PosLead> solve_critical_n3(const DominantWeight& lambda);

}  // namespace flagpoly
