#pragma once

#include <json.hpp>

#include "flagpoly/arrangement.hpp"
#include "flagpoly/polytope.hpp"
#include "flagpoly/toeplitz.hpp"

namespace flagpoly {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json word_to_json(const ReducedWord& w);
ReducedWord word_from_json(const Json& j);

// flags use comma-separated letters, e.g. "1,2,1"
ReducedWord parse_word(int n, const std::string& csv);

Json filling_to_json(const IdealFilling& f);
Json polytope_to_json(const TropPolytope& p, bool with_vertices, bool with_lattice);
Json matrix_to_json(const Matrix<RatFunc>& m);
Json matrix_to_json(const Matrix<PosLeadZ>& m);
Json arrangement_to_json(const Arrangement& a);
Json decoration_to_json(const Decoration& d);
Json witness_to_json(const ToeplitzWitness& w);

std::string vertices_csv(const std::vector<std::vector<Rational>>& verts);
std::string lattice_csv(const std::vector<std::vector<long long>>& pts);

}  // namespace flagpoly
