#include "jacpair/newton.hpp"

#include "helpers.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace jacpair;
using jacpair::testing::P;

namespace {

std::vector<Monomial> verts(std::initializer_list<std::pair<int, int>> pts) {
    std::vector<Monomial> out;
    for (auto [i, j] : pts) out.push_back({i, j});
    return out;
}

// brute-force hull vertex test: q is a vertex iff it is not inside the hull of the others
bool brute_is_vertex(const std::vector<Monomial>& pts, const Monomial& q) {
    // on-segment test against every pair
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = 0; b < pts.size(); ++b) {
            if (pts[a] == q || pts[b] == q || pts[a] == pts[b]) continue;
            if (on_segment(pts[a], pts[b], q)) return false;
        }
    // inside-triangle test against every triple
    auto cross = [](const Monomial& o, const Monomial& a, const Monomial& b) {
        return static_cast<long long>(a.i - o.i) * (b.j - o.j) -
               static_cast<long long>(a.j - o.j) * (b.i - o.i);
    };
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c) {
                if (pts[a] == q || pts[b] == q || pts[c] == q) continue;
                if (cross(pts[a], pts[b], pts[c]) == 0) continue;  // degenerate triangle
                long long d1 = cross(pts[a], pts[b], q);
                long long d2 = cross(pts[b], pts[c], q);
                long long d3 = cross(pts[c], pts[a], q);
                bool neg = d1 < 0 || d2 < 0 || d3 < 0;
                bool pos = d1 > 0 || d2 > 0 || d3 > 0;
                if (!(neg && pos)) return false;  // inside or on the triangle
            }
    return true;
}

}  // namespace

TEST_CASE("support") {
    auto s = support(P("x+y"));
    CHECK(std::set<Monomial>(s.begin(), s.end()) ==
          std::set<Monomial>{{1, 0}, {0, 1}});
    s = support(P("x^2*y^3-2*x*y^2+y"));
    CHECK(s.size() == 3);
    CHECK(support(P("5")) == std::vector<Monomial>{{0, 0}});
    CHECK_THROWS_AS(support(Poly2()), std::domain_error);
}

TEST_CASE("newton polygon canonical form") {
    CHECK(newton_polygon(P("x+y+x^5+x^2*y^3")).vertices() ==
          verts({{0, 1}, {1, 0}, {5, 0}, {2, 3}}));  // the D5 polygon
    CHECK(newton_polygon(P("x^3")).vertices() == verts({{3, 0}}));
    CHECK(newton_polygon(P("x+(y+x^2)^2")).vertices() == verts({{0, 2}, {1, 0}, {4, 0}}));
    CHECK(newton_polygon(P("x+(y+x^2)^2")).contains({2, 1}));  // interior to the top edge
}

TEST_CASE("hull agrees with the brute-force vertex oracle") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> coord(0, 7), count(1, 8);
    for (int k = 0; k < 300; ++k) {
        std::set<Monomial> pts;
        int n = count(rng);
        while (static_cast<int>(pts.size()) < n) pts.insert({coord(rng), coord(rng)});
        std::vector<Monomial> all(pts.begin(), pts.end());
        LatticePolygon h = LatticePolygon::hull_of(all);
        std::set<Monomial> hull_verts(h.vertices().begin(), h.vertices().end());
        for (const auto& q : all) {
            CHECK(h.contains(q));
            CHECK(hull_verts.count(q) == (brute_is_vertex(all, q) ? 1u : 0u));
        }
    }
}

TEST_CASE("support function") {
    Poly2 f = P("x^2*y^3-2*x*y^2+y+x");
    CHECK(support_value(newton_polygon(f), {-1, 1}) == 1);
    CHECK(support_value(LatticePolygon::hull_of({{0, 0}}), {3, -7}) == 0);
    CHECK(support_value(LatticePolygon::hull_of({{0, 1}, {5, 0}}), {1, 0}) == 5);
    CHECK_THROWS_AS(support_value(newton_polygon(f), {0, 0}), std::invalid_argument);
}

TEST_CASE("faces") {
    Poly2 f = P("x^2*y^3-2*x*y^2+y+x");
    Face e = face(newton_polygon(f), {-1, 1});
    REQUIRE(e.is_edge());
    CHECK(e.points == verts({{0, 1}, {2, 3}}));
    CHECK(symbolic_restriction(f, e) == P("x^2*y^3-2*x*y^2+y"));
    CHECK(symbolic_restriction(f, e) == P("y*(x*y-1)^2"));

    LatticePolygon d5 = newton_polygon(P("x+y+x^5+x^2*y^3"));
    Face deg = face(d5, {1, 1});
    CHECK(deg.points == verts({{2, 3}, {5, 0}}));
    Face bottom = face(d5, {0, -1});
    CHECK(bottom.points == verts({{1, 0}, {5, 0}}));
    Face vertex = face(d5, {5, 1});
    CHECK(vertex.is_vertex());
    CHECK(vertex.points == verts({{5, 0}}));
}

TEST_CASE("outer edges") {
    LatticePolygon d5 = newton_polygon(P("x+y+x^5+x^2*y^3"));
    auto outer = outer_edges(d5);
    REQUIRE(outer.size() == 2);
    CHECK(outer[0].points == verts({{2, 3}, {5, 0}}));
    CHECK(outer[1].points == verts({{0, 1}, {2, 3}}));

    auto seg = outer_edges(newton_polygon(P("x+y")));
    REQUIRE(seg.size() == 1);
    CHECK(seg[0].points == verts({{0, 1}, {1, 0}}));
    CHECK(seg[0].dir == Direction{1, 1});

    LatticePolygon d1 = LatticePolygon::hull_of({{1, 0}, {5, 0}, {2, 3}, {0, 4}, {0, 1}});
    auto o1 = outer_edges(d1);
    REQUIRE(o1.size() == 2);
    CHECK(o1[0].points == verts({{2, 3}, {5, 0}}));
    CHECK(o1[1].points == verts({{0, 4}, {2, 3}}));

    CHECK_THROWS_AS(outer_edges(LatticePolygon::hull_of({{1, 1}})), std::domain_error);
    // a diagonal segment is outer for both of its normals
    auto diag = outer_edges(LatticePolygon::hull_of({{1, 0}, {2, 2}}));
    CHECK(diag.size() == 2);
}

TEST_CASE("edge interior lattice points") {
    LatticePolygon d5 = newton_polygon(P("x+y+x^5+x^2*y^3"));
    auto e = face(d5, {1, 1});
    CHECK(edge_interior_lattice_points(e) == verts({{3, 2}, {4, 1}}));

    Face short_edge = face(LatticePolygon::hull_of({{1, 0}, {2, 2}}), {2, -1});
    CHECK(edge_interior_lattice_points(short_edge).empty());

    Face horizontal = face(LatticePolygon::hull_of({{0, 2}, {2, 2}, {0, 0}, {2, 0}}), {0, 1});
    CHECK(edge_interior_lattice_points(horizontal) == verts({{1, 2}}));
}

TEST_CASE("interior point count matches the gcd formula, exhaustively") {
    for (int ai = 0; ai <= 10; ++ai)
        for (int aj = 0; aj <= 10; ++aj)
            for (int bi = 0; bi <= 10; ++bi)
                for (int bj = 0; bj <= 10; ++bj) {
                    Monomial a{ai, aj}, b{bi, bj};
                    if (a == b) continue;
                    int brute = 0;
                    for (int i = std::min(ai, bi); i <= std::max(ai, bi); ++i)
                        for (int j = std::min(aj, bj); j <= std::max(aj, bj); ++j) {
                            Monomial q{i, j};
                            if (q == a || q == b) continue;
                            if (on_segment(a, b, q)) ++brute;
                        }
                    int g = static_cast<int>(std::gcd(std::abs(bi - ai), std::abs(bj - aj)));
                    REQUIRE(brute == g - 1);
                }
}

TEST_CASE("symbolic restriction corner cases") {
    Poly2 f = P("3*x^5+x^2*y^3+x");
    Face v = face(newton_polygon(f), {1, -1});
    REQUIRE(v.is_vertex());
    CHECK(symbolic_restriction(f, v) == P("3*x^5"));
    // a face of a different polygon, disjoint from the support
    Face other = face(LatticePolygon::hull_of({{0, 7}, {1, 7}}), {0, 1});
    CHECK(symbolic_restriction(f, other).is_zero());
}

TEST_CASE("is_convenient") {
    CHECK(is_convenient(P("x+y^3")));
    CHECK_FALSE(is_convenient(P("x*y+x")));
    CHECK(is_convenient(P("x+y+x^2")));
    CHECK_THROWS_AS(is_convenient(Poly2()), std::domain_error);
}

TEST_CASE("transpose") {
    CHECK(P("x^2*y").transposed() == P("x*y^2"));
    std::mt19937_64 rng(47);
    for (int k = 0; k < 30; ++k) {
        Poly2 p = jacpair::testing::random_poly(rng, 5, 6, 5);
        CHECK(p.transposed().transposed() == p);
        CHECK(newton_polygon(p).transposed().transposed() == newton_polygon(p));
    }
    LatticePolygon d30 = LatticePolygon::hull_of({{0, 1}, {1, 0}, {3, 0}, {3, 2}, {2, 3}, {0, 3}});
    CHECK(d30.transposed() ==
          LatticePolygon::hull_of({{1, 0}, {0, 1}, {0, 3}, {2, 3}, {3, 2}, {3, 0}}));
}

TEST_CASE("face restrictions are quasi-homogeneous") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> comp(-4, 4);
    for (int k = 0; k < 60; ++k) {
        Poly2 p = jacpair::testing::random_poly(rng, 5, 6, 5);
        Direction xi{comp(rng), comp(rng)};
        if (xi.is_zero()) continue;
        Face fc = face(newton_polygon(p), xi);
        Poly2 r = symbolic_restriction(p, fc);
        REQUIRE_FALSE(r.is_zero());
        for (const auto& [m, c] : r.terms()) CHECK(dot(xi, m) == fc.value);
    }
}

TEST_CASE("face compatibility with Jacobians") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> comp(-4, 4);
    int checked = 0;
    while (checked < 100) {
        Poly2 f = jacpair::testing::random_poly(rng, 5, 5, 4);
        Poly2 g = jacpair::testing::random_poly(rng, 5, 5, 4);
        Direction xi{comp(rng), comp(rng)};
        if (xi.is_zero()) continue;
        Poly2 jf = jacobian_det(face_restriction(f, xi), face_restriction(g, xi));
        if (jf.is_zero()) continue;
        Poly2 J = jacobian_det(f, g);
        REQUIRE_FALSE(J.is_zero());
        CHECK(face_restriction(J, xi) == jf);
        ++checked;
    }
}

TEST_CASE("faces of squares are nonnegative") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> comp(-5, 5);
    for (int k = 0; k < 40; ++k) {
        Poly2 s = jacpair::testing::random_poly(rng, 3, 4, 4);
        Poly2 h = s * s;
        Direction xi{comp(rng), comp(rng)};
        if (xi.is_zero()) continue;
        Poly2 hxi = face_restriction(h, xi);
        CHECK(hxi == face_restriction(s, xi) * face_restriction(s, xi));
        for (int t = 0; t < 100; ++t) {
            Rational x0 = jacpair::testing::random_rational(rng, 6, 4);
            Rational y0 = jacpair::testing::random_rational(rng, 6, 4);
            CHECK(hxi.eval(x0, y0) >= 0);
        }
    }
}
