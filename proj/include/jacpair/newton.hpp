#pragma once

#include "jacpair/poly.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace jacpair {

/// Integer direction vector; nonzero where used as a face selector.
struct Direction {
    long long xi1 = 0;
    long long xi2 = 0;
    friend auto operator<=>(const Direction&, const Direction&) = default;
    bool is_zero() const { return xi1 == 0 && xi2 == 0; }
};

inline long long dot(const Direction& d, const Monomial& m) {
    return d.xi1 * m.i + d.xi2 * m.j;
}

inline Direction primitive(const Direction& d) {
    if (d.is_zero()) throw std::invalid_argument("primitive of zero direction");
    long long g = std::gcd(std::abs(d.xi1), std::abs(d.xi2));
    return {d.xi1 / g, d.xi2 / g};
}

inline bool is_primitive(const Direction& d) {
    return !d.is_zero() && std::gcd(std::abs(d.xi1), std::abs(d.xi2)) == 1;
}

namespace detail {
inline long long cross(const Monomial& o, const Monomial& a, const Monomial& b) {
    return static_cast<long long>(a.i - o.i) * (b.j - o.j) -
           static_cast<long long>(a.j - o.j) * (b.i - o.i);
}
}  // namespace detail

/// Convex lattice polygon; vertices counterclockwise starting at the
/// lexicographically smallest, no three consecutive collinear. Degenerates to
/// a segment (two vertices) or a single point.
class LatticePolygon {
public:
    LatticePolygon() = default;

    static LatticePolygon hull_of(std::vector<Monomial> pts) {
        if (pts.empty()) throw std::invalid_argument("hull of empty point set");
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        LatticePolygon poly;
        if (pts.size() <= 2) {
            poly.v_ = pts;
            return poly;
        }
        std::vector<Monomial> lo, up;
        for (const auto& p : pts) {
            while (lo.size() >= 2 && detail::cross(lo[lo.size() - 2], lo.back(), p) <= 0)
                lo.pop_back();
            lo.push_back(p);
        }
        for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
            while (up.size() >= 2 && detail::cross(up[up.size() - 2], up.back(), *it) <= 0)
                up.pop_back();
            up.push_back(*it);
        }
        lo.pop_back();
        up.pop_back();
        lo.insert(lo.end(), up.begin(), up.end());
        if (lo.size() == 2 && lo[0] == lo[1]) lo.pop_back();  // fully collinear input
        // rotate to start at the lexicographically smallest vertex
        auto mn = std::min_element(lo.begin(), lo.end());
        std::rotate(lo.begin(), mn, lo.end());
        poly.v_ = std::move(lo);
        return poly;
    }

    const std::vector<Monomial>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    bool is_point() const { return v_.size() == 1; }
    bool is_segment() const { return v_.size() == 2; }

    friend auto operator<=>(const LatticePolygon&, const LatticePolygon&) = default;

    /// Exact point-in-polygon test (boundary counts as inside).
    bool contains(const Monomial& p) const {
        if (v_.empty()) return false;
        if (v_.size() == 1) return p == v_[0];
        if (v_.size() == 2) {
            if (detail::cross(v_[0], v_[1], p) != 0) return false;
            return std::min(v_[0], v_[1]) <= p && p <= std::max(v_[0], v_[1]);
        }
        for (std::size_t k = 0; k < v_.size(); ++k) {
            const Monomial& a = v_[k];
            const Monomial& b = v_[(k + 1) % v_.size()];
            if (detail::cross(a, b, p) < 0) return false;
        }
        return true;
    }

    LatticePolygon transposed() const {
        std::vector<Monomial> pts;
        pts.reserve(v_.size());
        for (const auto& m : v_) pts.push_back(transpose(m));
        return hull_of(std::move(pts));
    }

private:
    std::vector<Monomial> v_;
};

inline LatticePolygon newton_polygon(const Poly2& p) {
    return LatticePolygon::hull_of(support(p));
}

/// Maximizing vertex or edge of the polygon in direction `dir`, with the value.
struct Face {
    LatticePolygon polygon;
    Direction dir;
    std::vector<Monomial> points;  // one vertex or two edge endpoints, lexicographic
    long long value = 0;
    bool is_edge() const { return points.size() == 2; }
    bool is_vertex() const { return points.size() == 1; }
};

inline long long support_value(const LatticePolygon& poly, const Direction& xi) {
    if (xi.is_zero()) throw std::invalid_argument("support_value: zero direction");
    long long best = dot(xi, poly.vertices().front());
    for (const auto& v : poly.vertices()) best = std::max(best, dot(xi, v));
    return best;
}

inline Face face(const LatticePolygon& poly, const Direction& xi) {
    if (xi.is_zero()) throw std::invalid_argument("face: zero direction");
    long long l = support_value(poly, xi);
    std::vector<Monomial> pts;
    for (const auto& v : poly.vertices())
        if (dot(xi, v) == l) pts.push_back(v);
    std::sort(pts.begin(), pts.end());
    return Face{poly, xi, std::move(pts), l};
}

/// Edges whose primitive outward normal has at least one positive coordinate.
/// A segment polygon is reported once per qualifying normal.
inline std::vector<Face> outer_edges(const LatticePolygon& poly) {
    if (poly.size() < 2) throw std::domain_error("outer_edges of a single-point polygon");
    std::vector<Face> out;
    auto push_edge = [&](const Monomial& a, const Monomial& b, Direction normal) {
        normal = primitive(normal);
        if (normal.xi1 <= 0 && normal.xi2 <= 0) return;
        std::vector<Monomial> pts{a, b};
        std::sort(pts.begin(), pts.end());
        out.push_back(Face{poly, normal, std::move(pts), dot(normal, a)});
    };
    const auto& v = poly.vertices();
    if (poly.is_segment()) {
        Direction d{v[1].i - v[0].i, v[1].j - v[0].j};
        push_edge(v[0], v[1], {d.xi2, -d.xi1});
        push_edge(v[0], v[1], {-d.xi2, d.xi1});
        return out;
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
        const Monomial& a = v[k];
        const Monomial& b = v[(k + 1) % v.size()];
        Direction d{b.i - a.i, b.j - a.j};
        push_edge(a, b, {d.xi2, -d.xi1});  // outward normal of a CCW polygon
    }
    return out;
}

/// Lattice points strictly between the endpoints of an edge.
inline std::vector<Monomial> edge_interior_lattice_points(const Face& e) {
    if (!e.is_edge()) throw std::invalid_argument("edge_interior_lattice_points: vertex face");
    const Monomial& a = e.points[0];
    const Monomial& b = e.points[1];
    long long g = std::gcd(std::abs(b.i - a.i), std::abs(b.j - a.j));
    std::vector<Monomial> out;
    for (long long k = 1; k < g; ++k)
        out.push_back({a.i + static_cast<int>(k * (b.i - a.i) / g),
                       a.j + static_cast<int>(k * (b.j - a.j) / g)});
    return out;
}

inline int edge_lattice_length(const Face& e) {
    if (!e.is_edge()) throw std::invalid_argument("edge_lattice_length: vertex face");
    return static_cast<int>(
        std::gcd(std::abs(e.points[1].i - e.points[0].i), std::abs(e.points[1].j - e.points[0].j)));
}

inline bool on_segment(const Monomial& a, const Monomial& b, const Monomial& p) {
    if (detail::cross(a, b, p) != 0) return false;
    return std::min(a, b) <= p && p <= std::max(a, b);
}

/// Terms of p with exponents on the face (may be zero).
inline Poly2 symbolic_restriction(const Poly2& p, const Face& f) {
    Poly2 r;
    for (const auto& [m, c] : p.terms()) {
        if (f.is_vertex() ? (m == f.points[0]) : on_segment(f.points[0], f.points[1], m))
            r.add_term(m, c);
    }
    return r;
}

inline Poly2 symbolic_restriction(const Poly2& p, const std::set<Monomial>& pts) {
    Poly2 r;
    for (const auto& [m, c] : p.terms())
        if (pts.count(m)) r.add_term(m, c);
    return r;
}

/// Restriction of p to its own xi-face (the paper's f^xi).
inline Poly2 face_restriction(const Poly2& p, const Direction& xi) {
    return symbolic_restriction(p, face(newton_polygon(p), xi));
}

/// True iff the support contains a pure positive power of x and one of y.
inline bool is_convenient(const Poly2& p) {
    if (p.is_zero()) throw std::domain_error("is_convenient of zero");
    bool px = false, py = false;
    for (const auto& [m, c] : p.terms()) {
        if (m.j == 0 && m.i >= 1) px = true;
        if (m.i == 0 && m.j >= 1) py = true;
    }
    return px && py;
}

}  // namespace jacpair
