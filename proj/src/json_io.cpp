#include "flagpoly/json_io.hpp"

#include <sstream>

namespace flagpoly {

Json word_to_json(const ReducedWord& w) {
    Json j;
    j["n"] = w.n;
    j["letters"] = w.letters;
    return j;
}

ReducedWord word_from_json(const Json& j) {
    return ReducedWord(j.at("n").get<int>(), j.at("letters").get<std::vector<int>>());
}

ReducedWord parse_word(int n, const std::string& csv) {
    std::vector<int> letters;
    for (auto& r : parse_rational_list(csv)) {
        if (!is_integer(r)) throw ParseError("word letters must be integers");
        letters.push_back(static_cast<int>(boost::multiprecision::numerator(r)));
    }
    return ReducedWord(n, letters);
}

Json filling_to_json(const IdealFilling& f) {
    Json rows = Json::array();
    for (int i = 1; i < f.n; ++i) {
        Json row = Json::array();
        for (int j = i + 1; j <= f.n; ++j) row.push_back(rat_str(f.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json polytope_to_json(const TropPolytope& p, bool with_vertices, bool with_lattice) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["chart"] = p.chart == PolytopeChart::StringZ  ? "string"
                 : p.chart == PolytopeChart::IdealM ? "ideal"
                                                    : "gt";
    Json lam = Json::array();
    for (auto& c : p.lambda.comps) lam.push_back(rat_str(c));
    j["lambda"] = lam;
    Json ineqs = Json::array();
    for (auto& f : p.ineqs) {
        Json one;
        Json coeffs = Json::array();
        for (auto& c : f.a) coeffs.push_back(rat_str(c));
        one["coeffs"] = coeffs;
        one["const"] = rat_str(f.c);
        ineqs.push_back(one);
    }
    j["inequalities"] = ineqs;
    if (with_vertices) {
        Json vs = Json::array();
        for (auto& v : polytope_vertices(p)) {
            Json vv = Json::array();
            for (auto& c : v) vv.push_back(rat_str(c));
            vs.push_back(vv);
        }
        j["vertices"] = vs;
    }
    if (with_lattice) j["lattice_count"] = lattice_count(p);
    return j;
}

Json matrix_to_json(const Matrix<RatFunc>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

Json matrix_to_json(const Matrix<PosLeadZ>& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j)
            row.push_back(m.at(i, j).is_zero ? "0" : pl_str(m.at(i, j).v));
        rows.push_back(row);
    }
    return rows;
}

Json arrangement_to_json(const Arrangement& a) {
    Json j;
    j["word"] = word_to_json(a.word);
    Json cs = Json::array();
    for (auto& c : a.crossings) {
        Json cc;
        cc["pos"] = c.pos;
        cc["level"] = c.level;
        cc["x"] = c.pos;         // plot coordinates: crossing k at (k, level)
        cc["y"] = c.level;
        cs.push_back(cc);
    }
    j["crossings"] = cs;
    Json chs = Json::array();
    for (auto& ch : a.chambers) {
        Json cc;
        cc["band"] = ch.band;
        cc["from"] = ch.start;
        cc["to"] = ch.end;
        cc["label"] = std::vector<int>(ch.label.begin(), ch.label.end());
        // axis-aligned polygon for plotting
        cc["polygon"] = Json::array({Json::array({ch.start, ch.band}),
                                     Json::array({ch.end, ch.band}),
                                     Json::array({ch.end, ch.band + 1}),
                                     Json::array({ch.start, ch.band + 1})});
        chs.push_back(cc);
    }
    j["chambers"] = chs;
    return j;
}

Json decoration_to_json(const Decoration& d) {
    Json j;
    j["n"] = d.quiver.n;
    j["chart"] = d.chart == ChartKind::StringZ ? "string" : "ideal";
    Json nodes = Json::array();
    for (int i = 1; i <= d.quiver.n; ++i)
        for (int jj = 1; jj <= i; ++jj) {
            Json v;
            v["id"] = "v" + std::to_string(i) + std::to_string(jj);
            v["row"] = i;
            v["col"] = jj;
            v["star"] = (i == jj);
            nodes.push_back(v);
        }
    j["nodes"] = nodes;
    Json arrows = Json::array();
    for (auto& a : d.quiver.arrows) {
        Json aa;
        aa["id"] = a.name();
        aa["tail"] = "v" + std::to_string(a.tail().i) + std::to_string(a.tail().j);
        aa["head"] = "v" + std::to_string(a.head().i) + std::to_string(a.head().j);
        aa["value"] = LaurentPoly(d.vt, d.value(a)).str();
        arrows.push_back(aa);
    }
    j["arrows"] = arrows;
    return j;
}

Json witness_to_json(const ToeplitzWitness& w) {
    Json j;
    j["word"] = word_to_json(w.word);
    Json coords;
    for (auto& [root, v] : w.m)
        coords["a" + std::to_string(root.i) + std::to_string(root.j)] = pl_str(v);
    j["coords"] = coords;
    j["product"] = matrix_to_json(w.product);
    j["toeplitz"] = is_toeplitz(w.product);
    return j;
}

std::string vertices_csv(const std::vector<std::vector<Rational>>& verts) {
    std::ostringstream os;
    for (auto& v : verts) {
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
        os << "\n";
    }
    return os.str();
}

std::string lattice_csv(const std::vector<std::vector<long long>>& pts) {
    std::ostringstream os;
    for (auto& v : pts) {
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace flagpoly
