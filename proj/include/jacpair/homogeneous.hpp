#pragma once

#include "jacpair/poly.hpp"
#include "jacpair/unipoly.hpp"

#include <optional>

namespace jacpair {

inline bool is_homogeneous(const Poly2& p) {
    if (p.is_zero()) return true;
    int d = p.total_degree();
    for (const auto& [m, c] : p.terms())
        if (m.total_degree() != d) return false;
    return true;
}

/// For homogeneous p of degree d: u(t) = p(1, t). The multiplicity of x in p is
/// d - deg(u); the multiplicity of y is the t-valuation of u.
inline UniPoly dehomogenize(const Poly2& p) {
    if (p.is_zero()) throw std::domain_error("dehomogenize of zero");
    std::vector<Rational> cs;
    for (const auto& [m, c] : p.terms()) {
        if (static_cast<int>(cs.size()) <= m.j) cs.resize(m.j + 1, Rational(0));
        cs[m.j] = c;
    }
    return UniPoly::from_coeffs(std::move(cs));
}

/// Degree-e homogenization: u(t) of degree e maps to x^e * u(y/x).
inline Poly2 homogenize(const UniPoly& u) {
    if (u.is_zero()) return {};
    Poly2 p;
    int e = u.degree();
    for (int k = 0; k <= e; ++k)
        if (u.coeff(k) != 0) p.add_term({e - k, k}, u.coeff(k));
    return p;
}

/// Monic-normalized gcd of two homogeneous polynomials.
inline Poly2 homog_gcd(const Poly2& p, const Poly2& q) {
    if (p.is_zero() || q.is_zero() || !is_homogeneous(p) || !is_homogeneous(q))
        throw std::invalid_argument("homog_gcd expects nonzero homogeneous inputs");
    UniPoly up = dehomogenize(p), uq = dehomogenize(q);
    int ax = (p.total_degree() - up.degree());
    int bx = (q.total_degree() - uq.degree());
    UniPoly g = uni_gcd(up, uq);
    Poly2 result = homogenize(g);
    int xpow = std::min(ax, bx);
    if (xpow > 0) result = result * Poly2::term(1, xpow, 0);
    return result;
}

/// Product of p^(m_p) over the irreducible-over-Q factors of homogeneous D with
/// multiplicity m_p >= 2. x and y multiplicities are counted separately.
inline Poly2 multiple_factor_product(const Poly2& D) {
    if (D.is_zero() || !is_homogeneous(D))
        throw std::invalid_argument("multiple_factor_product expects a nonzero homogeneous input");
    UniPoly u = dehomogenize(D);
    int a = D.total_degree() - u.degree();  // multiplicity of x
    int v0 = std::max(u.valuation(), 0);    // multiplicity of y
    UniPoly u1 = u.shifted_down(v0);
    Poly2 h = Poly2::constant(1);
    if (a >= 2) h *= Poly2::term(1, a, 0);
    if (v0 >= 2) h *= Poly2::term(1, 0, v0);
    if (u1.degree() > 0) {
        for (const auto& [factor, mult] : squarefree_decomposition(u1))
            if (mult >= 2) h *= homogenize(factor.pow(static_cast<unsigned>(mult)));
    }
    return h;
}

/// Rational roots of a squarefree UniPoly found by isolating-interval probing.
inline std::vector<Rational> rational_roots_of_squarefree(const UniPoly& sf, int rounds = 64) {
    std::vector<Rational> roots;
    if (sf.degree() < 1) return roots;
    for (const auto& iv : isolate_real_roots(sf))
        if (auto r = find_rational_root_in(sf, iv, rounds)) roots.push_back(*r);
    return roots;
}

inline bool is_rational_square(const Rational& r, Rational* root = nullptr) {
    if (r < 0) return false;
    Int n = rat_num(r), d = rat_den(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    if (root) *root = Rational(sn, sd);
    return true;
}

}  // namespace jacpair
