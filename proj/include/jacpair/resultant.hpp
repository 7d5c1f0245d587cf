#pragma once

#include "jacpair/poly.hpp"
#include "jacpair/unipoly.hpp"

#include <vector>

namespace jacpair {

/// Coefficients of p as a polynomial in `var`; entry k is a UniPoly in the other variable.
inline std::vector<UniPoly> coefficients_in(const Poly2& p, Var var) {
    int d = p.degree_in(var);
    if (d < 0) return {};
    std::vector<std::vector<Rational>> raw(d + 1);
    for (const auto& [m, c] : p.terms()) {
        int k = (var == Var::X) ? m.i : m.j;
        int other = (var == Var::X) ? m.j : m.i;
        if (static_cast<int>(raw[k].size()) <= other) raw[k].resize(other + 1, Rational(0));
        raw[k][other] = c;
    }
    std::vector<UniPoly> out(d + 1);
    for (int k = 0; k <= d; ++k) out[k] = UniPoly::from_coeffs(std::move(raw[k]));
    return out;
}

inline Poly2 poly2_from_unipoly(const UniPoly& u, Var var) {
    Poly2 p;
    for (int k = 0; k <= u.degree(); ++k) {
        if (u.coeff(k) == 0) continue;
        p.add_term(var == Var::X ? Monomial{k, 0} : Monomial{0, k}, u.coeff(k));
    }
    return p;
}

namespace detail {

/// Exact determinant via fraction-free Bareiss on a denominator-cleared copy.
inline Rational rational_determinant(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Rational(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rational scale(1);
    for (int r = 0; r < n; ++r) {
        Int l = 1;
        for (int c = 0; c < n; ++c) l = lcm(l, rat_den(m[r][c]));
        scale *= l;
        for (int c = 0; c < n; ++c) a[r][c] = rat_num(m[r][c]) * (l / rat_den(m[r][c]));
    }
    int sgn = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { piv = r; break; }
            if (piv < 0) return Rational(0);
            std::swap(a[k], a[piv]);
            sgn = -sgn;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(sgn * a[n - 1][n - 1]) / scale;
}

/// Sylvester matrix in ascending coefficient order, p-rows first.
inline Rational sylvester_det_at(const std::vector<UniPoly>& pc, const std::vector<UniPoly>& qc,
                                 const Rational& x0) {
    const int m = static_cast<int>(pc.size()) - 1;
    const int n = static_cast<int>(qc.size()) - 1;
    const int size = m + n;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (int k = 0; k < n; ++k)
        for (int t = 0; t <= m; ++t) s[k][k + t] = pc[t].eval(x0);
    for (int k = 0; k < m; ++k)
        for (int t = 0; t <= n; ++t) s[n + k][k + t] = qc[t].eval(x0);
    return rational_determinant(std::move(s));
}

/// Newton-form interpolation through (xs[k], ys[k]).
inline UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;  // divided differences, computed in place
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t k = n - 1; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    UniPoly result;
    UniPoly basis(Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        result += dd[k] * basis;
        basis *= UniPoly::from_coeffs({-xs[k], Rational(1)});
    }
    return result;
}

}  // namespace detail

/// Sylvester resultant eliminating `var` (ascending-order convention, p-rows first,
/// so Res_y(y - x, y + x) = -2x). A polynomial constant in `var` contributes c^(deg q).
inline Poly2 resultant(const Poly2& p, const Poly2& q, Var var) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("resultant of a zero polynomial");
    const Var other = (var == Var::X) ? Var::Y : Var::X;
    const int m = p.degree_in(var);
    const int n = q.degree_in(var);
    if (m == 0) return p.pow(static_cast<unsigned>(n));
    if (n == 0) return q.pow(static_cast<unsigned>(m));
    auto pc = coefficients_in(p, var);
    auto qc = coefficients_in(q, var);
    const int bound = n * p.degree_in(other) + m * q.degree_in(other);
    std::vector<Rational> xs, ys;
    xs.reserve(bound + 1);
    ys.reserve(bound + 1);
    for (int k = 0; k <= bound; ++k) {
        // sample points 0, 1, -1, 2, -2, ...
        int v = (k + 1) / 2;
        Rational x0 = (k % 2 == 1) ? Rational(v) : Rational(-v);
        xs.push_back(x0);
        ys.push_back(detail::sylvester_det_at(pc, qc, x0));
    }
    return poly2_from_unipoly(detail::interpolate(xs, ys), other);
}

}  // namespace jacpair
