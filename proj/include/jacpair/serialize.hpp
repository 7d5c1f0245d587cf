#pragma once

#include "jacpair/certify.hpp"
#include "jacpair/enumerate.hpp"
#include "jacpair/pipeline.hpp"

#include <json.hpp>

#include <fstream>

namespace jacpair {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return to_string(r); }
inline json to_json(const Monomial& m) { return json::array({m.i, m.j}); }
inline json to_json(const Direction& d) { return json::array({d.xi1, d.xi2}); }
inline json to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }
inline json to_json(const RationalInterval& iv) {
    return json::array({to_string(iv.lo), to_string(iv.hi)});
}

inline json to_json(const LatticePolygon& poly) {
    json verts = json::array();
    for (const auto& v : poly.vertices()) verts.push_back(to_json(v));
    return json{{"vertices", verts}};
}

inline LatticePolygon polygon_from_json(const json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("polygon JSON needs a \"vertices\" array");
    std::vector<Monomial> pts;
    for (const auto& v : j["vertices"]) pts.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
    LatticePolygon hull = LatticePolygon::hull_of(pts);
    if (hull.size() != pts.size())
        throw std::invalid_argument("polygon JSON vertices are not in convex position");
    return hull;
}

/// Loads {"D1": {"vertices": [[i,j],...]}, ...}.
inline std::map<std::string, LatticePolygon> load_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open polygon file: " + path);
    json j;
    in >> j;
    std::map<std::string, LatticePolygon> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = polygon_from_json(it.value());
    return out;
}

inline json to_json(const WitnessPair& w) {
    return json{{"positive_point", to_json(w.positive)},
                {"negative_point", to_json(w.negative)},
                {"positive_value", to_string(w.positive_value)},
                {"negative_value", to_string(w.negative_value)}};
}

inline json to_json(const SignStatus& st) {
    const char* tag = nullptr;
    switch (st.tag) {
        case SignStatus::Tag::PositiveConstant: tag = "PositiveConstant"; break;
        case SignStatus::Tag::NegativeConstant: tag = "NegativeConstant"; break;
        case SignStatus::Tag::IdenticallyZero: tag = "IdenticallyZero"; break;
        case SignStatus::Tag::SignChanges: tag = "SignChanges"; break;
        case SignStatus::Tag::UndecidedNonconstant: tag = "UndecidedNonconstant"; break;
    }
    json j{{"tag", tag}};
    if (st.positive_witness) {
        j["positive_point"] = to_json(*st.positive_witness);
        j["positive_value"] = to_string(st.positive_value);
    }
    if (st.negative_witness) {
        j["negative_point"] = to_json(*st.negative_witness);
        j["negative_value"] = to_string(st.negative_value);
    }
    if (st.tag == SignStatus::Tag::UndecidedNonconstant) {
        j["samples"] = json{{"positive", st.summary.positive},
                            {"negative", st.summary.negative},
                            {"zeros", st.summary.zeros}};
    }
    return j;
}

inline json to_json(const EdgeEvidence& e) {
    return json{{"from", to_json(e.from)},
                {"to", to_json(e.to)},
                {"normal", to_json(e.normal)},
                {"interior_lattice_points", e.interior_points},
                {"reduction", e.reduction},
                {"degenerate", e.degenerate}};
}

inline json to_json(const InfinityPoint& p) {
    json j{{"multiplicity", p.multiplicity}};
    if (p.at_x_zero) {
        j["point"] = "x=0";
    } else if (p.root) {
        j["point"] = to_string(*p.root);
    } else {
        j["point_interval"] = to_json(p.root_interval);
    }
    return j;
}

inline json to_json(const Certificate& cert) {
    json j;
    switch (cert.kind) {
        case Certificate::Kind::Znak0: {
            const auto& c = std::get<Znak0Cert>(cert.payload);
            j["kind"] = "Znak0";
            j["F"] = c.F.str();
            j["G"] = c.G.str();
            j["H"] = c.H.str();
            j["nonzero_root_interval"] = to_json(c.nonzero_root);
            j["witnesses"] = to_json(c.witnesses);
            j["swapped"] = c.swapped;
            j["transposed"] = c.transposed;
            break;
        }
        case Certificate::Kind::Znak: {
            const auto& c = std::get<ZnakCert>(cert.payload);
            j["kind"] = "Znak";
            j["a"] = to_string(c.a);
            j["b"] = to_string(c.b);
            j["l_g"] = c.l_g;
            j["swapped"] = c.swapped;
            j["transposed"] = c.transposed;
            break;
        }
        case Certificate::Kind::VertexParity: {
            const auto& c = std::get<VertexParityCert>(cert.payload);
            j["kind"] = "VertexParity";
            j["alpha"] = to_json(c.alpha);
            j["beta"] = to_json(c.beta);
            j["xi"] = to_json(c.xi);
            break;
        }
        case Certificate::Kind::Hrc: {
            const auto& c = std::get<HrcCert>(cert.payload);
            j["kind"] = "Hrc";
            j["edge"] = json::array({to_json(c.endpoint_one), to_json(c.endpoint_ab)});
            j["component"] = c.component;
            break;
        }
        case Certificate::Kind::InfTypical: {
            const auto& c = std::get<InfTypicalCert>(cert.payload);
            j["kind"] = "InfTypical";
            j["candidate"] = c.candidate;
            if (c.mu) j["mu"] = to_string(*c.mu);
            json edges = json::array();
            for (const auto& e : c.edges) edges.push_back(to_json(e));
            j["outer_edges"] = edges;
            j["critical_points"] = c.critical_point_note;
            break;
        }
        case Certificate::Kind::OneRealBranchAtInfinity: {
            const auto& c = std::get<OneRealBranchCert>(cert.payload);
            j["kind"] = "OneRealBranchAtInfinity";
            j["candidate"] = c.candidate;
            if (c.mu) j["mu"] = to_string(*c.mu);
            j["leading_form"] = c.leading_form;
            json pts = json::array();
            for (const auto& p : c.points) pts.push_back(to_json(p));
            j["infinity_points"] = pts;
            break;
        }
        case Certificate::Kind::CriticalPoint: {
            const auto& c = std::get<CriticalPointCert>(cert.payload);
            j["kind"] = "CriticalPoint";
            j["at"] = to_json(c.at);
            j["candidate"] = c.candidate;
            if (c.mu) j["mu"] = to_string(*c.mu);
            break;
        }
        case Certificate::Kind::DirectWitness: {
            const auto& c = std::get<DirectWitnessCert>(cert.payload);
            j["kind"] = "DirectWitness";
            j["identically_zero"] = c.identically_zero;
            if (c.sign_witnesses) j["witnesses"] = to_json(*c.sign_witnesses);
            if (c.zero_point) j["zero_point"] = to_json(*c.zero_point);
            break;
        }
        case Certificate::Kind::TrustedFact: {
            const auto& c = std::get<TrustedFactCert>(cert.payload);
            j["kind"] = "TrustedFact";
            j["statement"] = c.statement;
            j["source"] = c.source;
            break;
        }
    }
    return j;
}

inline const char* to_string(Verdict::Tag tag) {
    switch (tag) {
        case Verdict::Tag::TypicalCertified: return "TypicalCertified";
        case Verdict::Tag::NotAJacobianPair: return "NotAJacobianPair";
        case Verdict::Tag::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline json to_json(const Verdict& v) {
    json certs = json::array();
    for (const auto& c : v.certificates) certs.push_back(to_json(c));
    return json{{"verdict", to_string(v.tag)}, {"certificates", certs}, {"trace", v.trace}};
}

inline json to_json(const PairTransform& t) {
    switch (t.op) {
        case PairTransform::Op::Shift:
            return json{{"op", "shift"}, {"params", {to_string(t.p1), to_string(t.p2)}}};
        case PairTransform::Op::PencilF:
            return json{{"op", "pencil"}, {"params", {to_string(t.p1)}}, {"target", "f"}};
        case PairTransform::Op::PencilG:
            return json{{"op", "pencil"}, {"params", {to_string(t.p1)}}, {"target", "g"}};
        case PairTransform::Op::Linear:
            return json{{"op", "linear"},
                        {"params",
                         {to_string(t.p1), to_string(t.p2), to_string(t.p3), to_string(t.p4)}}};
    }
    return {};
}

inline json analysis_report(const AnalyzeResult& res, const CertifyConfig& cfg) {
    json j;
    j["schema"] = 1;
    j["input"] = json{{"f", format_poly(res.f)}, {"g", format_poly(res.g)}};
    j["jacobian"] = format_poly(res.jacobian);
    j["jacobian_sign_status"] = to_json(res.sign_status);
    if (res.normalized) {
        json applied = json::array();
        for (const auto& t : res.normalized->applied) applied.push_back(to_json(t));
        j["normalization"] = json{{"f", format_poly(res.normalized->f)},
                                  {"g", format_poly(res.normalized->g)},
                                  {"applied", applied}};
    }
    if (res.h_classification) {
        j["h_classification"] = json{{"D", format_poly(res.h_classification->D)},
                                     {"h", format_poly(res.h_classification->h)},
                                     {"case", to_string(res.h_classification->h_case)}};
    }
    json newton = json::object();
    json edges = json::object();
    if (res.polygon_f) {
        newton["f"] = to_json(*res.polygon_f);
        json ef = json::array();
        for (const auto& e : res.edges_f) ef.push_back(to_json(e));
        edges["f"] = ef;
    }
    if (res.polygon_g) {
        newton["g"] = to_json(*res.polygon_g);
        json eg = json::array();
        for (const auto& e : res.edges_g) eg.push_back(to_json(e));
        edges["g"] = eg;
    }
    j["newton_polygon"] = newton;
    j["outer_edges"] = edges;
    json verdict = to_json(res.verdict);
    j["verdict"] = verdict["verdict"];
    j["certificates"] = verdict["certificates"];
    json trace = json::array();
    for (const auto& line : res.trace) trace.push_back(line);
    for (const auto& line : res.verdict.trace) trace.push_back(line);
    j["trace"] = trace;
    j["config"] = json{{"grid_halfwidth", to_string(cfg.grid_halfwidth)},
                       {"grid_step", to_string(cfg.grid_step)},
                       {"random_points", cfg.random_points},
                       {"random_max_denominator", cfg.random_max_denominator},
                       {"seed", cfg.seed},
                       {"pencil_mus", [&] {
                            json a = json::array();
                            for (const auto& m : cfg.pencil_mus) a.push_back(to_string(m));
                            return a;
                        }()},
                       {"xi_bound", cfg.xi_bound},
                       {"refine_depth", cfg.refine_depth}};
    return j;
}

inline json to_json(const AuditReport& rep) {
    json matched = json::object();
    for (const auto& [id, poly] : rep.matched) matched[id] = to_json(poly);
    json extras = json::array();
    for (const auto& ex : rep.extras)
        extras.push_back(json{{"polygon", to_json(ex.polygon)},
                              {"dismissed", ex.dismissed},
                              {"rule", ex.rule}});
    return json{{"schema", 1},
                {"case", rep.case_id},
                {"enumerated", rep.enumerated_count},
                {"matched", matched},
                {"missing", rep.missing},
                {"extras", extras},
                {"survivors", rep.survivors},
                {"passed", rep.passed}};
}

}  // namespace jacpair
