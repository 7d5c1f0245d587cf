// Command-line front end: analyze, newton, restrict, roots, enumerate, gen-tame.
//
// Exit codes for `analyze`: 0 TypicalCertified, 2 NotAJacobianPair,
// 3 Inconclusive, 1 input error. `enumerate --audit` exits 2 on audit failure.

#include "jacpair/parse.hpp"
#include "jacpair/serialize.hpp"
#include "jacpair/svg.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace jacpair;

Poly2 parse_or_die(const std::string& text, const char* what) {
    try {
        return parse_poly(text);
    } catch (const ParseError& e) {
        std::cerr << what << ": syntax error at offset " << e.offset << " (" << e.what() << ")\n";
        std::exit(1);
    }
}

Direction parse_direction(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--xi expects 'a,b'");
    return Direction{std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
}

UniPoly parse_unipoly(const std::string& text, const char* what) {
    Poly2 p = parse_or_die(text, what);
    if (p.is_zero()) return {};
    bool has_x = p.degree_in(Var::X) > 0, has_y = p.degree_in(Var::Y) > 0;
    if (has_x && has_y) {
        std::cerr << what << ": expected a univariate polynomial\n";
        std::exit(1);
    }
    auto cs = coefficients_in(p, has_y ? Var::X : Var::Y);
    return cs.at(0);
}

int cmd_analyze(const std::string& ftext, const std::string& gtext, const CertifyConfig& cfg,
                bool pretty) {
    Poly2 f = parse_or_die(ftext, "-f");
    Poly2 g = parse_or_die(gtext, "-g");
    AnalyzeResult res = analyze_pair(f, g, cfg);
    std::cout << analysis_report(res, cfg).dump(pretty ? 2 : -1) << "\n";
    switch (res.verdict.tag) {
        case Verdict::Tag::TypicalCertified: return 0;
        case Verdict::Tag::NotAJacobianPair: return 2;
        case Verdict::Tag::Inconclusive: return 3;
    }
    return 3;
}

json edge_json(const Poly2& p, const Face& e) {
    json j;
    j["from"] = to_json(e.points[0]);
    j["to"] = to_json(e.points[1]);
    j["normal"] = to_json(primitive(e.dir));
    json interior = json::array();
    for (const auto& m : edge_interior_lattice_points(e)) interior.push_back(to_json(m));
    j["interior_points"] = interior;
    DegeneracyCheck chk = is_degenerate_on_edge(p, e);
    j["degenerate"] = chk.degenerate;
    if (chk.degenerate) j["witness"] = chk.witness.str("s");
    return j;
}

int cmd_newton(const std::string& text, const std::string& xi_text, const std::string& svg_path,
               bool pretty) {
    Poly2 p = parse_or_die(text, "poly");
    if (p.is_zero()) {
        std::cerr << "poly: the zero polynomial has no Newton polygon\n";
        return 1;
    }
    LatticePolygon poly = newton_polygon(p);
    json j;
    j["schema"] = 1;
    j["poly"] = format_poly(p);
    j["polygon"] = to_json(poly);
    json edges = json::array();
    if (poly.size() >= 2)
        for (const Face& e : outer_edges(poly)) edges.push_back(edge_json(p, e));
    j["outer_edges"] = edges;
    std::optional<Face> highlight;
    if (!xi_text.empty()) {
        Direction xi = parse_direction(xi_text);
        Face fc = face(poly, xi);
        highlight = fc;
        json fj;
        fj["xi"] = to_json(xi);
        fj["value"] = fc.value;
        json pts = json::array();
        for (const auto& m : fc.points) pts.push_back(to_json(m));
        fj["points"] = pts;
        fj["type"] = fc.is_edge() ? "edge" : "vertex";
        fj["restriction"] = format_poly(symbolic_restriction(p, fc));
        if (fc.is_edge()) {
            EdgeReduction red = edge_univariate(p, fc);
            fj["reduction"] = json{{"xi", to_json(red.xi)},
                                   {"nu", to_json(red.nu)},
                                   {"F", red.uni.str("s")},
                                   {"u_power", red.u_pow},
                                   {"v_power", red.v_pow}};
        }
        j["face"] = fj;
    }
    if (!svg_path.empty()) write_svg(svg_path, polygon_svg(poly, p, highlight));
    std::cout << j.dump(pretty ? 2 : -1) << "\n";
    return 0;
}

int cmd_restrict(const std::string& text, const std::string& xi_text, bool pretty) {
    Poly2 p = parse_or_die(text, "poly");
    if (p.is_zero()) {
        std::cerr << "poly: the zero polynomial has no faces\n";
        return 1;
    }
    Direction xi = parse_direction(xi_text);
    Face fc = face(newton_polygon(p), xi);
    json j;
    j["schema"] = 1;
    j["xi"] = to_json(xi);
    j["value"] = fc.value;
    j["type"] = fc.is_edge() ? "edge" : "vertex";
    json pts = json::array();
    for (const auto& m : fc.points) pts.push_back(to_json(m));
    j["points"] = pts;
    j["restriction"] = format_poly(symbolic_restriction(p, fc));
    std::cout << j.dump(pretty ? 2 : -1) << "\n";
    return 0;
}

int cmd_roots(const std::string& text, const std::string& lo, const std::string& hi, bool pretty) {
    UniPoly u = parse_unipoly(text, "poly");
    if (u.is_zero()) {
        std::cerr << "poly: the zero polynomial has no root count\n";
        return 1;
    }
    json j;
    j["schema"] = 1;
    j["poly"] = u.str();
    if (!lo.empty() || !hi.empty()) {
        if (lo.empty() || hi.empty()) {
            std::cerr << "--lo and --hi must be given together\n";
            return 1;
        }
        RationalInterval iv(parse_rational(lo), parse_rational(hi));
        j["interval"] = to_json(iv);
        j["distinct_real_roots"] = sturm_count_real_roots(u, iv);
    } else {
        j["distinct_real_roots"] = sturm_count_real_roots(u);
    }
    json ivs = json::array();
    for (const auto& iv : isolate_real_roots(u)) ivs.push_back(to_json(iv));
    j["isolating_intervals"] = ivs;
    std::cout << j.dump(pretty ? 2 : -1) << "\n";
    return 0;
}

PolygonConstraints constraints_from_json(const json& j) {
    PolygonConstraints c;
    c.max_total_degree = j.value("max_total_degree", -1);
    if (j.contains("extra_points"))
        for (const auto& v : j["extra_points"])
            c.extra_points.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
    if (j.contains("required"))
        for (const auto& v : j["required"]) c.required.insert({v.at(0).get<int>(), v.at(1).get<int>()});
    if (j.contains("forbidden"))
        for (const auto& v : j["forbidden"])
            c.forbidden.insert({v.at(0).get<int>(), v.at(1).get<int>()});
    if (j.contains("fixed_top_face")) {
        const auto& t = j["fixed_top_face"];
        c.fixed_top_face = {{t.at(0).at(0).get<int>(), t.at(0).at(1).get<int>()},
                            {t.at(1).at(0).get<int>(), t.at(1).at(1).get<int>()}};
    }
    c.x_saturate = j.value("x_saturate", false);
    c.transpose_dedupe = j.value("transpose_dedupe", false);
    c.forbid_positive_slope_outer_edges = j.value("forbid_positive_slope_outer_edges", false);
    return c;
}

int cmd_enumerate(const std::string& case_id, const std::string& constraints_path,
                  const std::string& audit_path, int jobs, bool pretty) {
    PolygonConstraints constraints;
    std::vector<std::string> paper_ids;
    std::optional<std::pair<Monomial, Monomial>> fixed_face;
    bool mod_transpose = false;
    std::string label;
    try {
        if (!case_id.empty()) {
            CasePreset preset = case_preset(case_id);
            constraints = preset.constraints;
            paper_ids = preset.paper_ids;
            fixed_face = preset.fixed_top_face;
            mod_transpose = preset.mod_transpose;
            label = preset.id;
        } else {
            std::ifstream in(constraints_path);
            if (!in) throw std::runtime_error("cannot open constraints file: " + constraints_path);
            json j;
            in >> j;
            constraints = constraints_from_json(j);
            if (j.contains("paper_ids"))
                for (const auto& s : j["paper_ids"]) paper_ids.push_back(s.get<std::string>());
            fixed_face = constraints.fixed_top_face;
            mod_transpose = constraints.transpose_dedupe;
            label = "custom";
        }
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
    }
    std::vector<LatticePolygon> polys = enumerate_polygons(constraints, jobs);
    if (audit_path.empty()) {
        json arr = json::array();
        for (const auto& p : polys) arr.push_back(to_json(p));
        std::cout << json{{"schema", 1}, {"case", label}, {"polygons", arr}}.dump(pretty ? 2 : -1)
                  << "\n";
        return 0;
    }
    std::vector<std::pair<std::string, LatticePolygon>> paper_list;
    try {
        auto all = load_polygon_file(audit_path);
        for (const auto& id : paper_ids) {
            auto it = all.find(id);
            if (it == all.end()) throw std::runtime_error("polygon file lacks " + id);
            paper_list.push_back({id, it->second});
        }
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
    }
    AuditReport rep = audit_case(label, paper_list, polys, fixed_face, mod_transpose);
    std::cout << to_json(rep).dump(pretty ? 2 : -1) << "\n";
    return rep.passed ? 0 : 2;
}

int cmd_gen_tame(std::uint64_t seed, int steps, int bound, bool pretty) {
    TamePair tp = generate_tame_pair(seed, steps, bound);
    json j{{"schema", 1},
           {"seed", seed},
           {"f", format_poly(tp.f)},
           {"g", format_poly(tp.g)},
           {"jacobian", to_string(tp.jacobian)}};
    std::cout << j.dump(pretty ? 2 : -1) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Newton-polygon analysis and injectivity certification for real "
                 "polynomial pairs"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    CertifyConfig cfg;
    std::string ftext, gtext;
    auto* analyze = app.add_subcommand("analyze", "certify a pair (f, g)");
    analyze->add_option("-f", ftext, "first polynomial")->required();
    analyze->add_option("-g", gtext, "second polynomial")->required();
    analyze->add_option("--seed", cfg.seed, "sampling seed (default 0x4A4143)");
    analyze->add_option("--xi-bound", cfg.xi_bound,
                        "vertex-parity direction bound (default 12)");
    analyze->add_option("--depth", cfg.refine_depth,
                        "bisection depth for the critical-point search (default 64)");
    analyze->add_option("--random-points", cfg.random_points,
                        "random sample count for the sign scan (default 200)");

    std::string poly_text, xi_text, svg_path;
    auto* newton = app.add_subcommand("newton", "Newton polygon, outer edges, optional face");
    newton->add_option("poly", poly_text, "polynomial")->required();
    newton->add_option("--xi", xi_text, "face direction 'a,b'");
    newton->add_option("--svg", svg_path, "write an SVG plot to this path");

    std::string rpoly, rxi;
    auto* restrict_cmd = app.add_subcommand("restrict", "symbolic restriction to a face");
    restrict_cmd->add_option("poly", rpoly, "polynomial")->required();
    restrict_cmd->add_option("--xi", rxi, "face direction 'a,b'")->required();

    std::string upoly, lo, hi;
    auto* roots = app.add_subcommand("roots", "Sturm count and isolating intervals");
    roots->add_option("poly", upoly, "univariate polynomial (in x or y)")->required();
    roots->add_option("--lo", lo, "interval lower endpoint (rational)");
    roots->add_option("--hi", hi, "interval upper endpoint (rational)");

    std::string case_id, constraints_path, audit_path;
    int jobs = 1;
    auto* enumerate = app.add_subcommand("enumerate", "candidate-polygon enumeration and audit");
    enumerate->add_option("--case", case_id, "one of II, III, IV-x4, IV-x2y2, THM2");
    enumerate->add_option("--constraints", constraints_path, "constraints JSON file");
    enumerate->add_option("--audit", audit_path, "paper polygon data file (polygons.json)");
    enumerate->add_option("--jobs", jobs, "worker threads (default 1)");

    std::uint64_t seed = 1;
    int steps = 3, bound = 3;
    auto* gen = app.add_subcommand("gen-tame", "generate a tame pair with constant Jacobian");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--steps", steps, "elementary steps, at most 4");
    gen->add_option("--coeff-bound", bound, "coefficient bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(ftext, gtext, cfg, pretty);
        if (*newton) return cmd_newton(poly_text, xi_text, svg_path, pretty);
        if (*restrict_cmd) return cmd_restrict(rpoly, rxi, pretty);
        if (*roots) return cmd_roots(upoly, lo, hi, pretty);
        if (*enumerate) {
            if (case_id.empty() == constraints_path.empty()) {
                std::cerr << "enumerate needs exactly one of --case or --constraints\n";
                return 1;
            }
            return cmd_enumerate(case_id, constraints_path, audit_path, jobs, pretty);
        }
        if (*gen) return cmd_gen_tame(seed, steps, bound, pretty);
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
    }
    return 1;
}
