#pragma once

#include "jacpair/poly.hpp"
#include "jacpair/unipoly.hpp"

namespace jacpair {

inline RationalInterval iv_add(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RationalInterval iv_mul(const RationalInterval& a, const RationalInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return {std::min(std::min(c1, c2), std::min(c3, c4)),
            std::max(std::max(c1, c2), std::max(c3, c4))};
}

inline RationalInterval iv_scale(const RationalInterval& a, const Rational& c) {
    return c >= 0 ? RationalInterval{a.lo * c, a.hi * c} : RationalInterval{a.hi * c, a.lo * c};
}

inline RationalInterval iv_pow(const RationalInterval& a, int e) {
    if (e == 0) return {Rational(1), Rational(1)};
    RationalInterval r = a;
    for (int k = 1; k < e; ++k) r = iv_mul(r, a);
    // tighten even powers straddling zero
    if (e % 2 == 0 && a.lo < 0 && a.hi > 0) r.lo = 0;
    return r;
}

/// Conservative interval enclosure of p over the box X x Y (monomial-wise).
inline RationalInterval eval_box(const Poly2& p, const RationalInterval& X,
                                 const RationalInterval& Y) {
    RationalInterval acc{Rational(0), Rational(0)};
    for (const auto& [m, c] : p.terms())
        acc = iv_add(acc, iv_scale(iv_mul(iv_pow(X, m.i), iv_pow(Y, m.j)), c));
    return acc;
}

inline bool iv_contains_zero(const RationalInterval& a) { return a.lo <= 0 && 0 <= a.hi; }

}  // namespace jacpair
