#pragma once

#include "flagpoly/charts.hpp"
#include "flagpoly/fillings.hpp"

namespace flagpoly {

class UnboundedError : public std::runtime_error {
public:
    explicit UnboundedError(const std::string& w) : std::runtime_error(w) {}
};

// a . x + c  (one inequality "form >= 0" per superpotential monomial)
struct AffineForm {
    std::vector<Rational> a;
    Rational c;

    Rational eval(const std::vector<Rational>& x) const {
        Rational acc = c;
        for (size_t i = 0; i < a.size(); ++i) acc += a[i] * x[i];
        return acc;
    }
    bool operator==(const AffineForm& o) const { return a == o.a && c == o.c; }
};

enum class PolytopeChart { StringZ, IdealM, VertexGT };

struct TropPolytope {
    int dim = 0;
    std::vector<AffineForm> ineqs;
    DominantWeight lambda;
    PolytopeChart chart;

    bool contains(const std::vector<Rational>& x) const {
        for (auto& f : ineqs)
            if (f.eval(x) < 0) return false;
        return true;
    }
    // min over the forms = Trop(W) at the point
    Rational trop_value(const std::vector<Rational>& x) const {
        Rational m = ineqs[0].eval(x);
        for (size_t i = 1; i < ineqs.size(); ++i) {
            Rational v = ineqs[i].eval(x);
            if (v < m) m = v;
        }
        return m;
    }
};

// H-representation of the superpotential polytope in the i0 string / ideal
// charts (one inequality per quiver arrow monomial) or the Gelfand-Tsetlin
// polytope from the vertex chart.
TropPolytope polytope_hrep(PolytopeChart chart, const DominantWeight& lambda);

// Exact vertex enumeration over all dim-subsets of tight inequalities.
// Serial reference and OpenMP kernel produce identical sorted output.
std::vector<std::vector<Rational>> polytope_vertices_serial(const TropPolytope& p);
std::vector<std::vector<Rational>> polytope_vertices(const TropPolytope& p);

bool polytope_bounded(const TropPolytope& p);

// Integer points via bounding box + inequality filter (int64 fast path).
long long lattice_count_serial(const TropPolytope& p);
long long lattice_count(const TropPolytope& p);
std::vector<std::vector<long long>> lattice_points(const TropPolytope& p);

// Valuation of the weight-matrix diagonal at a point of the chart.
std::vector<Rational> trop_weight_projection(const std::vector<Rational>& point,
                                             PolytopeChart chart, const DominantWeight& lambda);

// Tropical braid move on slot-indexed valuations.
std::vector<Rational> trop_braid_move(const std::vector<Rational>& vals, const Move& mv);

// Composition of tropical braid moves along braid_path(w1, w2).
std::vector<Rational> pl_transfer(const std::vector<Rational>& point, const ReducedWord& w1,
                                  const ReducedWord& w2);

// Membership of a slot-indexed point in the ideal polytope of an arbitrary
// word, by pulling back to i0.
bool ideal_polytope_member(const std::vector<Rational>& point, const ReducedWord& word,
                           const DominantWeight& lambda);

// Independent oracle: direct recursive enumeration of Gelfand-Tsetlin
// patterns with integral top row lambda.
long long gt_pattern_count_serial(const DominantWeight& lambda);
long long gt_pattern_count(const DominantWeight& lambda);

}  // namespace flagpoly
