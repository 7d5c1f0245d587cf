#pragma once

#include "jacpair/rational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jacpair {

struct RationalInterval {
    Rational lo, hi;
    RationalInterval() = default;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    Rational mid() const { return (lo + hi) / 2; }
    Rational width() const { return hi - lo; }
};

/// Exact univariate polynomial; coeffs_[k] is the coefficient of t^k.
/// The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    static UniPoly from_coeffs(std::vector<Rational> cs) {
        UniPoly p;
        p.coeffs_ = std::move(cs);
        p.normalize();
        return p;
    }
    static UniPoly t() { return from_coeffs({Rational(0), Rational(1)}); }
    static UniPoly monomial(const Rational& c, int k) {
        std::vector<Rational> cs(k + 1, Rational(0));
        cs[k] = c;
        return from_coeffs(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    /// Smallest exponent with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return static_cast<int>(k);
        return -1;
    }

    UniPoly shifted_down(int k) const {  // divide by t^k; requires valuation >= k
        if (k == 0) return *this;
        if (valuation() < k) throw std::invalid_argument("shifted_down: not divisible by t^k");
        return from_coeffs({coeffs_.begin() + k, coeffs_.end()});
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) cs[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) cs[k] += b.coeffs_[k];
        return from_coeffs(std::move(cs));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) cs[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) cs[k] -= b.coeffs_[k];
        return from_coeffs(std::move(cs));
    }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                if (b.coeffs_[j] != 0) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return from_coeffs(std::move(cs));
    }
    friend UniPoly operator*(const Rational& c, const UniPoly& p) {
        if (c == 0) return {};
        UniPoly r = p;
        for (auto& k : r.coeffs_) k *= c;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly pow(unsigned e) const {
        UniPoly r(Rational(1)), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            if (e >>= 1u) b *= b;
        }
        return r;
    }

    UniPoly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> cs(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) cs[k - 1] = coeffs_[k] * k;
        return from_coeffs(std::move(cs));
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return Rational(1) / leading() * *this;
    }

    /// Quotient and remainder over the rationals.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
        if (a.degree() < b.degree()) return {{}, a};
        std::vector<Rational> rem = a.coeffs_;
        std::vector<Rational> quot(a.degree() - b.degree() + 1, Rational(0));
        const Rational lc = b.leading();
        for (int k = a.degree(); k >= b.degree(); --k) {
            Rational q = rem[k] / lc;
            if (q == 0) continue;
            quot[k - b.degree()] = q;
            for (int j = 0; j <= b.degree(); ++j) rem[k - b.degree() + j] -= q * b.coeffs_[j];
        }
        return {from_coeffs(std::move(quot)), from_coeffs(std::move(rem))};
    }

    bool divides(const UniPoly& other) const {
        if (other.is_zero()) return true;
        if (is_zero()) return false;
        return divmod(other, *this).second.is_zero();
    }

    UniPoly divided_exactly_by(const UniPoly& d) const {
        auto [q, r] = divmod(*this, d);
        if (!r.is_zero()) throw std::logic_error("divided_exactly_by: nonzero remainder");
        return q;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            Rational c = coeffs_[k];
            if (c == 0) continue;
            Rational a = c;
            if (a < 0) {
                os << (first ? "-" : " - ");
                a = -a;
            } else if (!first) {
                os << " + ";
            }
            if (k == 0) {
                os << to_string(a);
            } else {
                if (a != 1) os << to_string(a) << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::vector<Rational> coeffs_;
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = UniPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Yun's algorithm: U = lc * prod factor_k^mult_k with monic squarefree
/// pairwise-coprime factors. Constant inputs decompose to an empty list.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& u) {
    if (u.is_zero()) throw std::domain_error("squarefree_decomposition of zero");
    std::vector<std::pair<UniPoly, int>> parts;
    if (u.degree() == 0) return parts;
    UniPoly du = u.derivative();
    UniPoly g = uni_gcd(u, du);
    if (g.degree() == 0) {
        parts.push_back({u.monic(), 1});
        return parts;
    }
    // w and y must stay exactly paired: u = g*w, u' = g*y
    UniPoly w = u.divided_exactly_by(g);
    UniPoly y = du.divided_exactly_by(g);
    int i = 1;
    while (w.degree() > 0) {
        UniPoly z = y - w.derivative();
        UniPoly a = uni_gcd(w, z);
        if (a.degree() > 0) parts.push_back({a, i});
        w = w.divided_exactly_by(a);
        y = z.divided_exactly_by(a);
        ++i;
    }
    return parts;
}

inline UniPoly squarefree_part(const UniPoly& u) {
    UniPoly r(Rational(1));
    for (const auto& [f, m] : squarefree_decomposition(u)) r *= f;
    return r;
}

namespace detail {

/// Sturm chain of the squarefree part, remainders scaled by positive constants.
inline std::vector<UniPoly> sturm_chain(const UniPoly& squarefree) {
    std::vector<UniPoly> chain;
    chain.push_back(squarefree);
    if (squarefree.degree() >= 1) {
        chain.push_back(squarefree.derivative());
        while (chain.back().degree() >= 1) {
            UniPoly r = -UniPoly::divmod(chain[chain.size() - 2], chain.back()).second;
            if (r.is_zero()) break;
            // positive rescale keeps the sign sequence intact and coefficients small
            Rational m = 0;
            for (const auto& c : r.coeffs())
                if (abs(c) > m) m = abs(c);
            chain.push_back(Rational(1) / m * r);
        }
    }
    return chain;
}

inline int sign_at(const UniPoly& p, const Rational& x) { return sign(p.eval(x)); }

inline int sign_at_infinity(const UniPoly& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = sign(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
}

inline int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

inline int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign_at(p, x));
    return variations(signs);
}

inline int variations_at_infinity(const std::vector<UniPoly>& chain, bool positive) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign_at_infinity(p, positive));
    return variations(signs);
}

}  // namespace detail

/// A bound B with all real roots strictly inside (-B, B), and the endpoints non-roots.
inline Rational root_bound(const UniPoly& u) {
    if (u.is_zero() || u.degree() == 0) return Rational(1);
    Rational m = 0;
    for (int k = 0; k < u.degree(); ++k) {
        Rational a = abs(u.coeff(k) / u.leading());
        if (a > m) m = a;
    }
    Rational b = m + 2;
    while (u.eval(b) == 0 || u.eval(-b) == 0) b += 1;
    return b;
}

/// Number of distinct real roots on the whole line.
inline int sturm_count_real_roots(const UniPoly& u) {
    if (u.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (u.degree() == 0) return 0;
    UniPoly sf = squarefree_part(u);
    auto chain = detail::sturm_chain(sf);
    return detail::variations_at_infinity(chain, false) - detail::variations_at_infinity(chain, true);
}

namespace detail {

// Recursive isolation: (lo, hi) has non-root endpoints and `count` distinct roots of sf.
inline void isolate_rec(const UniPoly& sf, const std::vector<UniPoly>& chain, const Rational& lo,
                        const Rational& hi, int vlo, int vhi, std::vector<RationalInterval>* out) {
    int count = vlo - vhi;
    if (count <= 0) return;
    if (count == 1) {
        out->push_back(RationalInterval(lo, hi));
        return;
    }
    Rational mid = (lo + hi) / 2;
    while (sf.eval(mid) == 0) mid = (mid + hi) / 2;  // move the cut off a root
    int vmid = variations_at(chain, mid);
    isolate_rec(sf, chain, lo, mid, vlo, vmid, out);
    isolate_rec(sf, chain, mid, hi, vmid, vhi, out);
}

}  // namespace detail

/// Disjoint open intervals with rational non-root endpoints, one distinct real root each.
inline std::vector<RationalInterval> isolate_real_roots(const UniPoly& u) {
    if (u.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
    std::vector<RationalInterval> out;
    if (u.degree() == 0) return out;
    UniPoly sf = squarefree_part(u);
    if (sf.degree() == 0) return out;
    auto chain = detail::sturm_chain(sf);
    Rational b = root_bound(sf);
    detail::isolate_rec(sf, chain, -b, b, detail::variations_at(chain, -b),
                        detail::variations_at(chain, b), &out);
    return out;
}

/// Shrinks an isolating interval for u's unique root in iv; endpoints stay non-roots.
inline RationalInterval refine_isolating_interval(const UniPoly& sf, const RationalInterval& iv) {
    Rational mid = iv.mid();
    Rational v = sf.eval(mid);
    if (v == 0) {
        // exact root at mid: pick non-root endpoints hugging it
        Rational lo = (iv.lo + mid) / 2, hi = (mid + iv.hi) / 2;
        return RationalInterval(lo, hi);
    }
    // the half containing the root is the one with a sign change
    if (sign(sf.eval(iv.lo)) * sign(v) < 0) return RationalInterval(iv.lo, mid);
    return RationalInterval(mid, iv.hi);
}

/// Number of distinct real roots in the closed interval [lo, hi].
inline int sturm_count_real_roots(const UniPoly& u, const RationalInterval& iv) {
    if (u.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (u.degree() == 0) return 0;
    UniPoly sf = squarefree_part(u);
    if (sf.degree() == 0) return 0;
    int count = 0;
    if (sf.eval(iv.lo) == 0) ++count;
    if (iv.hi != iv.lo && sf.eval(iv.hi) == 0) ++count;
    auto roots = isolate_real_roots(sf);
    for (auto r : roots) {
        // refine until entirely inside or entirely outside [lo, hi]
        while (true) {
            if (r.hi <= iv.lo || r.lo >= iv.hi) break;                 // outside (endpoints non-roots)
            if (iv.lo < r.lo && r.hi < iv.hi) { ++count; break; }      // strictly inside
            if (sf.eval(iv.lo) == 0 && r.contains(iv.lo)) break;       // that root is lo, counted
            if (sf.eval(iv.hi) == 0 && r.contains(iv.hi)) break;       // that root is hi, counted
            r = refine_isolating_interval(sf, r);
        }
    }
    return count;
}

/// Probes an isolating interval for an exact rational root, via simplest-rational search.
inline std::optional<Rational> find_rational_root_in(const UniPoly& sf, RationalInterval iv,
                                                     int max_rounds = 64) {
    for (int round = 0; round < max_rounds; ++round) {
        Rational s = simplest_rational_in(iv.lo, iv.hi);
        if (sf.eval(s) == 0) return s;
        iv = refine_isolating_interval(sf, iv);
    }
    return std::nullopt;
}

}  // namespace jacpair
