#pragma once

#include "jacpair/newton.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace jacpair {

/// Constraint set for the brute-force candidate-polygon enumeration.
struct PolygonConstraints {
    int max_total_degree = 5;                 // degree region i+j <= d (skipped if < 0)
    std::vector<Monomial> extra_points;       // points outside the degree region
    std::set<Monomial> required;
    std::set<Monomial> forbidden;
    std::optional<std::pair<Monomial, Monomial>> fixed_top_face;
    bool x_saturate = false;                  // close subsets leftward per row before hulling
    bool transpose_dedupe = false;
    bool forbid_positive_slope_outer_edges = false;
    int region_cap = 24;
};

inline std::vector<Monomial> constraint_region(const PolygonConstraints& c) {
    std::set<Monomial> pts;
    for (int i = 0; i <= c.max_total_degree; ++i)
        for (int j = 0; i + j <= c.max_total_degree; ++j) pts.insert({i, j});
    for (const auto& m : c.extra_points) pts.insert(m);
    return {pts.begin(), pts.end()};
}

inline LatticePolygon transpose_canonical(const LatticePolygon& p) {
    LatticePolygon t = p.transposed();
    return std::min(p, t);
}

namespace detail {

inline bool has_positive_slope_outer_edge(const LatticePolygon& poly) {
    if (poly.size() < 2) return false;
    for (const Face& e : outer_edges(poly)) {
        int di = e.points[1].i - e.points[0].i;  // endpoints sorted lexicographically
        int dj = e.points[1].j - e.points[0].j;
        if (di > 0 && dj > 0) return true;
    }
    return false;
}

inline bool satisfies_constraints(const LatticePolygon& poly, const PolygonConstraints& c) {
    for (const auto& m : c.required)
        if (!poly.contains(m)) return false;
    if (c.fixed_top_face) {
        Face top = face(poly, {1, 1});
        if (!top.is_edge()) return false;
        Monomial a = std::min(c.fixed_top_face->first, c.fixed_top_face->second);
        Monomial b = std::max(c.fixed_top_face->first, c.fixed_top_face->second);
        if (!(top.points[0] == a && top.points[1] == b)) return false;
    }
    if (c.forbid_positive_slope_outer_edges && has_positive_slope_outer_edge(poly)) return false;
    return true;
}

}  // namespace detail

/// All distinct convex hulls of admissible subsets containing the required points
/// and avoiding the forbidden ones; every output re-verified against the
/// constraints after construction.
inline std::vector<LatticePolygon> enumerate_polygons(const PolygonConstraints& c, int jobs = 1) {
    std::vector<Monomial> region = constraint_region(c);
    if (static_cast<int>(region.size()) > c.region_cap)
        throw std::invalid_argument("enumerate_polygons: region exceeds the point cap");
    for (const auto& m : c.required) {
        if (c.forbidden.count(m))
            throw std::invalid_argument("enumerate_polygons: required point is forbidden");
        if (std::find(region.begin(), region.end(), m) == region.end())
            throw std::invalid_argument("enumerate_polygons: required point outside the region");
    }
    std::vector<Monomial> free_pts;
    for (const auto& m : region)
        if (!c.required.count(m) && !c.forbidden.count(m)) free_pts.push_back(m);
    const std::uint64_t total = 1ull << free_pts.size();

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::set<LatticePolygon>* out) {
        std::vector<Monomial> pts;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            pts.assign(c.required.begin(), c.required.end());
            for (std::size_t b = 0; b < free_pts.size(); ++b)
                if (mask & (1ull << b)) pts.push_back(free_pts[b]);
            if (c.x_saturate) {
                std::set<Monomial> closed(pts.begin(), pts.end());
                for (const auto& m : pts)
                    for (int i = 0; i < m.i; ++i) closed.insert({i, m.j});
                bool bad = false;
                for (const auto& m : c.forbidden)
                    if (closed.count(m)) bad = true;
                if (bad) continue;
                pts.assign(closed.begin(), closed.end());
            }
            LatticePolygon poly = LatticePolygon::hull_of(pts);
            if (!detail::satisfies_constraints(poly, c)) continue;
            out->insert(c.transpose_dedupe ? transpose_canonical(poly) : poly);
        }
    };

    std::set<LatticePolygon> hulls;
    if (jobs <= 1 || total < 1024) {
        run_range(0, total, &hulls);
    } else {
        std::vector<std::set<LatticePolygon>> parts(jobs);
        std::vector<std::thread> workers;
        std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back(run_range, lo, hi, &parts[w]);
        }
        for (auto& t : workers) t.join();
        for (auto& p : parts) hulls.merge(p);
    }
    return {hulls.begin(), hulls.end()};
}

/// One representative per {P, transpose(P)} class (the canonical-min of the two).
inline std::vector<LatticePolygon> transpose_dedupe(const std::vector<LatticePolygon>& polys) {
    std::set<LatticePolygon> out;
    for (const auto& p : polys) out.insert(transpose_canonical(p));
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Audit of the paper's candidate lists
// ---------------------------------------------------------------------------

/// Dismissal rule: every outer edge other than the fixed top face has no interior
/// lattice points (which guarantees non-degeneracy on all of them).
inline bool dismissed_by_lattice_rule(const LatticePolygon& poly,
                                      const std::optional<std::pair<Monomial, Monomial>>& top) {
    if (poly.size() < 2) return true;
    std::optional<std::pair<Monomial, Monomial>> t;
    if (top) t = std::make_pair(std::min(top->first, top->second), std::max(top->first, top->second));
    for (const Face& e : outer_edges(poly)) {
        if (t && e.points[0] == t->first && e.points[1] == t->second) continue;
        if (edge_lattice_length(e) > 1) return false;
    }
    return true;
}

struct AuditExtra {
    LatticePolygon polygon;
    bool dismissed = false;
    std::string rule;  // "lattice-free-outer-edges" or "NONE"
};

struct AuditReport {
    std::string case_id;
    std::size_t enumerated_count = 0;
    std::vector<std::pair<std::string, LatticePolygon>> matched;
    std::vector<std::string> missing;
    std::vector<AuditExtra> extras;
    std::vector<std::string> survivors;  // matched and not dismissed by the rule
    bool passed = false;
};

inline AuditReport audit_case(const std::string& case_id,
                              const std::vector<std::pair<std::string, LatticePolygon>>& paper_list,
                              const std::vector<LatticePolygon>& enumerated,
                              const std::optional<std::pair<Monomial, Monomial>>& fixed_top_face,
                              bool mod_transpose) {
    AuditReport rep;
    rep.case_id = case_id;
    rep.enumerated_count = enumerated.size();
    auto canon = [&](const LatticePolygon& p) {
        return mod_transpose ? transpose_canonical(p) : p;
    };
    std::set<LatticePolygon> enum_set;
    for (const auto& p : enumerated) enum_set.insert(canon(p));
    std::set<LatticePolygon> paper_set;
    for (const auto& [id, poly] : paper_list) {
        paper_set.insert(canon(poly));
        if (enum_set.count(canon(poly))) {
            rep.matched.push_back({id, poly});
            if (!dismissed_by_lattice_rule(poly, fixed_top_face)) rep.survivors.push_back(id);
        } else {
            rep.missing.push_back(id);
        }
    }
    bool all_dismissed = true;
    for (const auto& p : enumerated) {
        if (paper_set.count(canon(p))) continue;
        AuditExtra ex;
        ex.polygon = p;
        ex.dismissed = dismissed_by_lattice_rule(p, fixed_top_face);
        ex.rule = ex.dismissed ? "lattice-free-outer-edges" : "NONE";
        all_dismissed = all_dismissed && ex.dismissed;
        rep.extras.push_back(std::move(ex));
    }
    rep.passed = rep.missing.empty() && all_dismissed;
    return rep;
}

// ---------------------------------------------------------------------------
// Case presets from the proof's normalization
// ---------------------------------------------------------------------------

struct CasePreset {
    std::string id;
    PolygonConstraints constraints;
    std::vector<std::string> paper_ids;
    std::optional<std::pair<Monomial, Monomial>> fixed_top_face;
    bool mod_transpose = false;
};

inline CasePreset case_preset(const std::string& id) {
    CasePreset p;
    p.id = id;
    auto ids = [](int lo, int hi, std::vector<int> skip = {}) {
        std::vector<std::string> out;
        for (int k = lo; k <= hi; ++k)
            if (std::find(skip.begin(), skip.end(), k) == skip.end())
                out.push_back("D" + std::to_string(k));
        return out;
    };
    if (id == "II") {
        // h = x^2, y does not divide the leading form
        p.constraints.max_total_degree = 5;
        p.constraints.required = {{1, 0}, {0, 1}, {5, 0}, {2, 3}};
        p.constraints.forbidden = {{0, 0}, {0, 5}, {1, 4}};
        p.constraints.fixed_top_face = {{{2, 3}, {5, 0}}};
        p.paper_ids = ids(1, 5);
        p.fixed_top_face = p.constraints.fixed_top_face;
    } else if (id == "III") {
        // h = x^3
        p.constraints.max_total_degree = 5;
        p.constraints.required = {{1, 0}, {0, 1}, {5, 0}, {3, 2}};
        p.constraints.forbidden = {{0, 0}, {0, 5}, {1, 4}, {2, 3}};
        p.constraints.fixed_top_face = {{{3, 2}, {5, 0}}};
        p.paper_ids = ids(7, 15);
        p.fixed_top_face = p.constraints.fixed_top_face;
    } else if (id == "IV-x4") {
        // h = x^4
        p.constraints.max_total_degree = 5;
        p.constraints.required = {{1, 0}, {0, 1}, {5, 0}, {4, 1}};
        p.constraints.forbidden = {{0, 0}, {0, 5}, {1, 4}, {2, 3}, {3, 2}};
        p.constraints.fixed_top_face = {{{4, 1}, {5, 0}}};
        p.paper_ids = ids(16, 24);
        p.fixed_top_face = p.constraints.fixed_top_face;
    } else if (id == "IV-x2y2") {
        // h = x^2 y^2: leading form x^2 y^2 (a x + b y), a b != 0; symmetric case
        p.constraints.max_total_degree = 5;
        p.constraints.required = {{1, 0}, {0, 1}, {2, 3}, {3, 2}};
        p.constraints.forbidden = {{0, 0}, {5, 0}, {4, 1}, {1, 4}, {0, 5}};
        p.constraints.fixed_top_face = {{{2, 3}, {3, 2}}};
        p.constraints.transpose_dedupe = true;
        p.paper_ids = ids(25, 36, {32});
        p.fixed_top_face = p.constraints.fixed_top_face;
        p.mod_transpose = true;
    } else if (id == "THM2") {
        // f = x^5 + lower order, nonzero constant, generic x-shift applied
        p.constraints.max_total_degree = 4;
        p.constraints.extra_points = {{5, 0}};
        p.constraints.required = {{0, 0}, {5, 0}};
        p.constraints.x_saturate = true;
        p.constraints.forbid_positive_slope_outer_edges = true;
        p.paper_ids = ids(37, 46);
    } else {
        throw std::invalid_argument("unknown case id: " + id);
    }
    return p;
}

}  // namespace jacpair
