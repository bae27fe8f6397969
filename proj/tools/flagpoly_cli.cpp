#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <iostream>

#include "flagpoly/json_io.hpp"
#include "flagpoly/verify.hpp"

using namespace flagpoly;

namespace {

bool color_enabled() {
    return std::getenv("NO_COLOR") == nullptr;
}

DominantWeight parse_lambda(const std::string& csv) {
    try {
        return DominantWeight(parse_rational_list(csv));
    } catch (const std::domain_error&) {
        throw CLI::ValidationError(
            "--lambda must be a comma-separated weakly decreasing list, e.g. 2,1,-1");
    }
}

PolytopeChart parse_chart(const std::string& s) {
    if (s == "string") return PolytopeChart::StringZ;
    if (s == "ideal") return PolytopeChart::IdealM;
    if (s == "gt") return PolytopeChart::VertexGT;
    throw CLI::ValidationError("--chart must be string, ideal or gt");
}

int cmd_superpotential(int n, const std::string& chart, const std::string& wordcsv) {
    ReducedWord w = wordcsv.empty() ? word_i0(n) : parse_word(n, wordcsv);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = n;
    j["chart"] = chart;
    j["word"] = word_to_json(w);
    if (chart == "string") {
        if (w == word_i0(n)) {
            Decoration dec = decorate(build_quiver(n), ChartKind::StringZ);
            j["superpotential"] = quiver_superpotential(dec).str();
        } else {
            j["superpotential"] = string_chart(w).w.str();
        }
    } else if (chart == "ideal") {
        if (w == word_i0(n)) {
            Decoration dec = decorate(build_quiver(n), ChartKind::IdealM);
            j["superpotential"] = quiver_superpotential(dec).str();
        } else {
            // pull the i0 superpotential back through the braid transfer
            auto vt = VarTable::coords_and_params("m", w.length(), n);
            std::vector<RatFunc> vals;
            for (int k = 0; k < w.length(); ++k) vals.push_back(RatFunc::variable(vt, k));
            auto i0vals = chart_transfer(vals, w, word_i0(n));
            Decoration dec = decorate(build_quiver(n), ChartKind::IdealM);
            RatFunc acc = RatFunc::zero(vt);
            for (const auto& m : superpotential_monomials(dec)) {
                RatFunc term = RatFunc::constant(vt, m.coeff);
                for (int k = 0; k < w.length(); ++k) {
                    int e = m.exps[k];
                    for (int s = 0; s < std::abs(e); ++s)
                        term = e > 0 ? term * i0vals[k] : term / i0vals[k];
                }
                for (int p = 0; p < n; ++p) {
                    int e = m.exps[w.length() + p];
                    for (int s = 0; s < std::abs(e); ++s) {
                        RatFunc dv = RatFunc::variable(vt, w.length() + p);
                        term = e > 0 ? term * dv : term / dv;
                    }
                }
                acc = acc + term;
            }
            j["superpotential"] = acc.str();
        }
    } else {
        throw CLI::ValidationError("superpotential supports --chart string or ideal");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_polytope(const DominantWeight& lam, const std::string& chart, bool vertices, bool lattice,
                 const std::string& csvpath) {
    TropPolytope p = polytope_hrep(parse_chart(chart), lam);
    Json j = polytope_to_json(p, vertices, lattice);
    if (!csvpath.empty()) {
        std::ofstream out(csvpath);
        if (vertices) out << vertices_csv(polytope_vertices(p));
        if (lattice) out << lattice_csv(lattice_points(p));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_critical_point(const DominantWeight& lam, const std::string& wordcsv) {
    ReducedWord w = wordcsv.empty() ? word_i0(lam.n()) : parse_word(lam.n(), wordcsv);
    auto byroot = tropical_critical_point(lam, w);
    auto slots = tropical_critical_point_slots(lam, w);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["word"] = word_to_json(w);
    Json coords;
    for (auto& [root, v] : byroot)
        coords["a" + std::to_string(root.i) + std::to_string(root.j)] = rat_str(v);
    j["point_by_root"] = coords;
    Json sl = Json::array();
    for (auto& v : slots) sl.push_back(rat_str(v));
    j["slots"] = sl;
    Json wt = Json::array();
    for (auto& v : trop_weight_projection(tropical_critical_point_slots(lam, word_i0(lam.n())),
                                          PolytopeChart::IdealM, lam))
        wt.push_back(rat_str(v));
    j["weight"] = wt;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_ideal_filling(const DominantWeight& lam) {
    IdealFilling f = filling_for_weight(lam);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["filling"] = filling_to_json(f);
    j["ell"] = rat_str(lam.ell());
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_transfer(const DominantWeight& lam, const std::string& fromcsv, const std::string& tocsv,
                 const std::string& pointcsv) {
    ReducedWord wfrom = parse_word(lam.n(), fromcsv);
    ReducedWord wto = parse_word(lam.n(), tocsv);
    auto point = parse_rational_list(pointcsv);
    if (static_cast<int>(point.size()) != wfrom.length())
        throw CLI::ValidationError("--point needs N = n(n-1)/2 coordinates");
    auto image = pl_transfer(point, wfrom, wto);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["from"] = word_to_json(wfrom);
    j["to"] = word_to_json(wto);
    Json img = Json::array();
    for (auto& v : image) img.push_back(rat_str(v));
    j["image"] = img;
    j["member_from"] = ideal_polytope_member(point, wfrom, lam);
    j["member_to"] = ideal_polytope_member(image, wto, lam);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_toeplitz(int n, int samples, unsigned seed) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = n;
    Json ws = Json::array();
    if (n == 3) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(0, 6), den(1, 3), cnum(1, 9);
        for (int s = 0; s < samples; ++s) {
            auto w = toeplitz_family_n3(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                        Rational(cnum(rng), den(rng)),
                                        Rational(cnum(rng), den(rng)));
            Json one = witness_to_json(w);
            auto rep = theorem_check(w);
            one["filling_valid"] = rep.filling_valid;
            one["filling"] = filling_to_json(rep.filling);
            ws.push_back(one);
        }
    } else if (n == 4) {
        for (auto& w : toeplitz_search_n4(samples, seed)) {
            Json one = witness_to_json(w);
            auto rep = theorem_check(w);
            one["filling_valid"] = rep.filling_valid;
            one["filling"] = filling_to_json(rep.filling);
            ws.push_back(one);
        }
    } else {
        throw CLI::ValidationError("toeplitz supports --n 3 or --n 4");
    }
    j["witnesses"] = ws;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite) {
    bool color = color_enabled();
    auto results = run_verification(suite);
    bool allpass = true;
    for (auto& r : results) {
        const char* tag = r.pass ? (color ? "\033[32mPASS\033[0m" : "PASS")
                                 : (color ? "\033[31mFAIL\033[0m" : "FAIL");
        std::printf("%s  [%2d] %s (%.2fs)%s%s\n", tag, r.id, r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        allpass = allpass && r.pass;
    }
    return allpass ? 0 : 1;
}

int cmd_arrangement(int n, const std::string& wordcsv) {
    ReducedWord w = wordcsv.empty() ? word_i0(n) : parse_word(n, wordcsv);
    Json j = arrangement_to_json(build_arrangement(w));
    j["schema_version"] = kSchemaVersion;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_quiver(int n, const std::string& chart) {
    Json j = decoration_to_json(decorate(
        build_quiver(n), chart == "string" ? ChartKind::StringZ : ChartKind::IdealM));
    j["schema_version"] = kSchemaVersion;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_gt(const DominantWeight& lam) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["patterns"] = gt_pattern_count(lam);
    j["lattice_count"] = lattice_count(polytope_hrep(PolytopeChart::VertexGT, lam));
    j["dimension"] = weyl_dimension(lam).str();
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flagpoly: superpotential polytopes, ideal fillings and tropical critical "
                 "points for GL_n flag varieties"};
    app.require_subcommand(1);

    std::string lambda, chart = "string", wordcsv, fromcsv, tocsv, pointcsv, csvpath;
    std::string suite = "all";
    int n = 3, samples = 20;
    unsigned seed = 1;
    bool vertices = false, lattice = false;

    auto* sp = app.add_subcommand("superpotential", "print the superpotential of a chart");
    sp->add_option("--n", n, "matrix size")->required();
    sp->add_option("--chart", chart, "string | ideal");
    sp->add_option("--word", wordcsv, "reduced word letters, e.g. 1,2,1 (default i0)");

    auto* pp = app.add_subcommand("polytope", "superpotential polytope data");
    pp->add_option("--lambda", lambda, "dominant weight, e.g. 2,1,-1")->required();
    pp->add_option("--chart", chart, "string | ideal | gt");
    pp->add_flag("--vertices", vertices, "emit exact vertices");
    pp->add_flag("--lattice", lattice, "emit the lattice point count");
    pp->add_option("--csv", csvpath, "write vertex/lattice CSV to this path");

    auto* cp = app.add_subcommand("critical-point", "tropical critical point of W_{t^lambda}");
    cp->add_option("--lambda", lambda)->required();
    cp->add_option("--word", wordcsv, "ideal chart word (default i0)");

    auto* fi = app.add_subcommand("ideal-filling", "the ideal filling for a dominant weight");
    fi->add_option("--lambda", lambda)->required();

    auto* tr = app.add_subcommand("transfer", "piecewise-linear chart transfer of a point");
    tr->add_option("--lambda", lambda)->required();
    tr->add_option("--from-word", fromcsv)->required();
    tr->add_option("--to-word", tocsv)->required();
    tr->add_option("--point", pointcsv)->required();

    auto* tp = app.add_subcommand("toeplitz", "Toeplitz witnesses and the filling check");
    tp->add_option("--n", n, "3 or 4")->required();
    tp->add_option("--samples", samples, "number of witnesses");
    tp->add_option("--seed", seed, "RNG seed");

    auto* vf = app.add_subcommand("verify", "run verification suites");
    vf->add_option("--suite", suite, "minors|charts|quiver|fillings|polytopes|toeplitz|all");

    auto* gt = app.add_subcommand("gt", "Gelfand-Tsetlin pattern counts");
    gt->add_option("--lambda", lambda)->required();

    auto* ar = app.add_subcommand("arrangement", "ansatz arrangement as plot-ready JSON");
    ar->add_option("--n", n, "matrix size")->required();
    ar->add_option("--word", wordcsv, "reduced word (default i0)");

    auto* qv = app.add_subcommand("quiver", "decorated quiver as a JSON graph");
    qv->add_option("--n", n, "matrix size")->required();
    qv->add_option("--chart", chart, "string | ideal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed()) return cmd_superpotential(n, chart, wordcsv);
        if (pp->parsed()) return cmd_polytope(parse_lambda(lambda), chart, vertices, lattice, csvpath);
        if (cp->parsed()) return cmd_critical_point(parse_lambda(lambda), wordcsv);
        if (fi->parsed()) return cmd_ideal_filling(parse_lambda(lambda));
        if (tr->parsed()) return cmd_transfer(parse_lambda(lambda), fromcsv, tocsv, pointcsv);
        if (tp->parsed()) return cmd_toeplitz(n, samples, seed);
        if (vf->parsed()) return cmd_verify(suite);
        if (gt->parsed()) return cmd_gt(parse_lambda(lambda));
        if (ar->parsed()) return cmd_arrangement(n, wordcsv);
        if (qv->parsed()) return cmd_quiver(n, chart);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonGenericError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 3;
    } catch (const NonRationalError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
