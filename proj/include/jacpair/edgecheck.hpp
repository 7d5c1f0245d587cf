#pragma once

#include "jacpair/newton.hpp"
#include "jacpair/unipoly.hpp"

#include <optional>

namespace jacpair {

/// Unimodular reduction of an edge restriction to a univariate polynomial:
/// substituting x = u^xi1 v^nu1, y = u^xi2 v^nu2 into p|_E gives
/// u^u_pow * v^v_pow * F(1/v), with F(0) != 0.
struct EdgeReduction {
    Direction xi;   // primitive outward normal
    Direction nu;   // complement with xi1*nu2 - xi2*nu1 = 1
    UniPoly uni;    // the F of the reduction
    long long u_pow = 0;
    long long v_pow = 0;
};

namespace detail {
struct Egcd {
    long long g, s, t;  // s*a + t*b = g
};
inline Egcd egcd(long long a, long long b) {
    if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? 1LL : -1LL, 0LL};
    Egcd e = egcd(b, a % b);
    return {e.g, e.t, e.s - (a / b) * e.t};
}
}  // namespace detail

inline Direction primitive_outward_normal(const Face& e) {
    if (!e.is_edge()) throw std::invalid_argument("primitive_outward_normal: vertex face");
    return primitive(e.dir);
}

/// Canonical nu with xi1*nu2 - xi2*nu1 = 1: minimal Euclidean norm, ties toward
/// nonnegative nu1.
inline Direction complementary_unimodular(const Direction& xi) {
    if (!is_primitive(xi)) throw std::invalid_argument("complementary_unimodular: non-primitive xi");
    // nu2*xi1 + nu1*(-xi2) = 1
    auto e = detail::egcd(xi.xi1, -xi.xi2);
    Direction nu{e.t, e.s};
    // minimize |nu + k*xi| over integers k
    auto norm2 = [](const Direction& d) { return d.xi1 * d.xi1 + d.xi2 * d.xi2; };
    long long num = -(nu.xi1 * xi.xi1 + nu.xi2 * xi.xi2);
    long long den = xi.xi1 * xi.xi1 + xi.xi2 * xi.xi2;
    long long k0 = num >= 0 ? num / den : -((-num + den - 1) / den);  // floor
    Direction best{0, 0};
    bool have = false;
    for (long long k : {k0, k0 + 1}) {
        Direction cand{nu.xi1 + k * xi.xi1, nu.xi2 + k * xi.xi2};
        if (!have) {
            best = cand;
            have = true;
            continue;
        }
        auto a = norm2(cand), b = norm2(best);
        if (a < b || (a == b && best.xi1 < 0 && cand.xi1 >= 0)) best = cand;
    }
    return best;
}

inline EdgeReduction edge_univariate(const Poly2& p, const Face& e) {
    if (!e.is_edge()) throw std::invalid_argument("edge_univariate: vertex face");
    Poly2 r = symbolic_restriction(p, e);
    if (r.is_zero()) throw std::invalid_argument("edge_univariate: zero restriction");
    Direction xi = primitive_outward_normal(e);
    Direction nu = complementary_unimodular(xi);
    if (xi.xi1 * nu.xi2 - xi.xi2 * nu.xi1 != 1)
        throw std::logic_error("complementary_unimodular determinant != 1");
    long long w = dot(xi, r.terms().begin()->first);
    long long vmax = dot(nu, r.terms().begin()->first);
    for (const auto& [m, c] : r.terms()) {
        if (dot(xi, m) != w) throw std::logic_error("edge restriction is not xi-homogeneous");
        vmax = std::max(vmax, dot(nu, m));
    }
    std::vector<Rational> cs;
    for (const auto& [m, c] : r.terms()) {
        long long k = vmax - dot(nu, m);
        if (static_cast<long long>(cs.size()) <= k) cs.resize(k + 1, Rational(0));
        cs[k] = c;
    }
    return EdgeReduction{xi, nu, UniPoly::from_coeffs(std::move(cs)), w, vmax};
}

struct DegeneracyCheck {
    bool degenerate = false;
    UniPoly witness;  // squarefree part of gcd(F, F')
    EdgeReduction reduction;
};

/// A polynomial is degenerate on an edge iff its reduction F has a repeated
/// nonconstant factor, i.e. gcd(F, F') is nonconstant.
inline DegeneracyCheck is_degenerate_on_edge(const Poly2& p, const Face& e) {
    EdgeReduction red = edge_univariate(p, e);
    UniPoly g = uni_gcd(red.uni, red.uni.derivative());
    DegeneracyCheck out;
    out.degenerate = g.degree() >= 1;
    out.witness = out.degenerate ? squarefree_part(g) : UniPoly(Rational(1));
    out.reduction = std::move(red);
    return out;
}

/// Largest H with H^2 dividing a univariate polynomial's factorization.
inline UniPoly square_part(const UniPoly& u) {
    UniPoly h(Rational(1));
    if (u.degree() < 2) return h;
    for (const auto& [factor, mult] : squarefree_decomposition(u))
        if (mult >= 2) h *= factor.pow(static_cast<unsigned>(mult / 2));
    return h;
}

/// If the edge reductions F (of f) and G (of g) share a square factor H^2,
/// reconstructs the bivariate h (divisible by neither x nor y) with h^2
/// dividing both restrictions; verified by exact division.
inline std::optional<Poly2> common_square_factor(const Poly2& f, const Poly2& g, const Face& e) {
    Poly2 rf = symbolic_restriction(f, e);
    Poly2 rg = symbolic_restriction(g, e);
    if (rf.is_zero() || rg.is_zero()) return std::nullopt;
    EdgeReduction redf = edge_univariate(f, e);
    EdgeReduction redg = edge_univariate(g, e);
    UniPoly H = square_part(uni_gcd(redf.uni, redg.uni));
    if (H.degree() < 1) return std::nullopt;
    const Direction& xi = redf.xi;
    // h_laurent = H(x^xi2 * y^(-xi1)), then the minimal monomial shift into the ring
    long long minx = 0, miny = 0;
    bool first = true;
    for (int k = 0; k <= H.degree(); ++k) {
        if (H.coeff(k) == 0) continue;
        long long ex = xi.xi2 * k, ey = -xi.xi1 * k;
        if (first) {
            minx = ex;
            miny = ey;
            first = false;
        } else {
            minx = std::min(minx, ex);
            miny = std::min(miny, ey);
        }
    }
    Poly2 h;
    for (int k = 0; k <= H.degree(); ++k) {
        if (H.coeff(k) == 0) continue;
        h.add_term({static_cast<int>(xi.xi2 * k - minx), static_cast<int>(-xi.xi1 * k - miny)},
                   H.coeff(k));
    }
    Poly2 h2 = h * h;
    if (!try_divide_exact(rf, h2, nullptr) || !try_divide_exact(rg, h2, nullptr))
        return std::nullopt;
    return h;
}

}  // namespace jacpair
