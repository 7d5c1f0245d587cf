#pragma once

#include "jacpair/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace jacpair {

/// Exponent pair (i, j) of a term x^i * y^j.
struct Monomial {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    int total_degree() const { return i + j; }
};

enum class Var { X, Y };

inline Monomial transpose(const Monomial& m) { return {m.j, m.i}; }

// Printing order: total degree descending, x-exponent descending within a degree.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
        return a.i > b.i;
    }
};

/// Sparse bivariate polynomial over the rationals. Immutable in spirit: all
/// operations return new values; stored coefficients are never zero.
class Poly2 {
public:
    using TermMap = std::map<Monomial, Rational>;

    Poly2() = default;

    static Poly2 constant(const Rational& c) {
        Poly2 p;
        if (c != 0) p.terms_[{0, 0}] = c;
        return p;
    }

    static Poly2 variable(Var v) { return term(1, v == Var::X ? 1 : 0, v == Var::X ? 0 : 1); }

    static Poly2 term(const Rational& c, int i, int j) {
        if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in Poly2 term");
        Poly2 p;
        if (c != 0) p.terms_[{i, j}] = c;
        return p;
    }

    static Poly2 from_terms(std::initializer_list<std::pair<Monomial, Rational>> ts) {
        Poly2 p;
        for (const auto& [m, c] : ts) p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
    }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational coeff(int i, int j) const { return coeff({i, j}); }

    Rational constant_term() const { return coeff(0, 0); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Poly2 operator+(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Poly2 operator-(const Poly2& a, const Poly2& b) {
        Poly2 r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    Poly2 operator-() const {
        Poly2 r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
        return r;
    }

    Poly2 scaled(const Rational& c) const {
        Poly2 r;
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    friend Poly2 operator*(const Rational& c, const Poly2& p) { return p.scaled(c); }
    friend Poly2 operator*(const Poly2& p, const Rational& c) { return p.scaled(c); }

    Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
    Poly2& operator-=(const Poly2& o) { return *this = *this - o; }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

    Poly2 pow(unsigned e) const {
        Poly2 result = constant(1);
        Poly2 base = *this;
        while (e) {
            if (e & 1u) result *= base;
            if (e >>= 1u) base *= base;
        }
        return result;
    }

    Poly2 derivative(Var v) const {
        Poly2 r;
        for (const auto& [m, c] : terms_) {
            if (v == Var::X) {
                if (m.i > 0) r.add_term({m.i - 1, m.j}, c * m.i);
            } else {
                if (m.j > 0) r.add_term({m.i, m.j - 1}, c * m.j);
            }
        }
        return r;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        // Horner in x per y-row keeps the number of big multiplications low.
        std::map<int, std::vector<std::pair<int, Rational>>> rows;
        for (const auto& [m, c] : terms_) rows[m.j].push_back({m.i, c});
        Rational total = 0;
        Rational ypow = 1;
        int ylast = 0;
        for (const auto& [j, row] : rows) {
            for (; ylast < j; ++ylast) ypow *= y;
            Rational acc = 0;
            int ilast = -1;
            for (auto it = row.rbegin(); it != row.rend(); ++it) {
                if (ilast < 0) {
                    acc = it->second;
                } else {
                    for (int k = it->first; k < ilast; ++k) acc *= x;
                    acc += it->second;
                }
                ilast = it->first;
            }
            for (int k = 0; k < ilast; ++k) acc *= x;
            total += acc * ypow;
        }
        return total;
    }

    int total_degree() const {
        if (terms_.empty()) throw std::domain_error("total_degree of the zero polynomial");
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    int degree_in(Var v) const {
        if (terms_.empty()) return -1;
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, v == Var::X ? m.i : m.j);
        return d;
    }

    Poly2 leading_form() const {
        int d = total_degree();
        Poly2 r;
        for (const auto& [m, c] : terms_)
            if (m.total_degree() == d) r.terms_[m] = c;
        return r;
    }

    Poly2 transposed() const {
        Poly2 r;
        for (const auto& [m, c] : terms_) r.terms_[transpose(m)] = c;
        return r;
    }

    /// Substitute x -> xs, y -> ys.
    Poly2 compose(const Poly2& xs, const Poly2& ys) const {
        // group by j so each y-power is expanded once
        std::map<int, Poly2> rows;
        for (const auto& [m, c] : terms_) rows[m.j].add_term({m.i, 0}, c);
        Poly2 result;
        Poly2 ypow = constant(1);
        int ylast = 0;
        for (const auto& [j, row] : rows) {
            for (; ylast < j; ++ylast) ypow *= ys;
            // Horner in x over the row
            Poly2 acc;
            int ilast = -1;
            std::vector<std::pair<int, Rational>> xs_terms;
            for (const auto& [m, c] : row.terms_) xs_terms.push_back({m.i, c});
            for (auto it = xs_terms.rbegin(); it != xs_terms.rend(); ++it) {
                if (ilast < 0) {
                    acc = constant(it->second);
                } else {
                    for (int k = it->first; k < ilast; ++k) acc *= xs;
                    acc += constant(it->second);
                }
                ilast = it->first;
            }
            for (int k = 0; k < ilast; ++k) acc *= xs;
            result += acc * ypow;
        }
        return result;
    }

    /// x -> x + a, y -> y + b.
    Poly2 substitute_affine(const Rational& a, const Rational& b) const {
        return compose(variable(Var::X) + constant(a), variable(Var::Y) + constant(b));
    }

    /// axis = Y: y -> y + b*x^k; axis = X: x -> x + b*y^k. Requires k >= 1.
    Poly2 substitute_shear(const Rational& b, int k, Var axis) const {
        if (k < 1) throw std::invalid_argument("shear exponent must be >= 1");
        if (axis == Var::Y)
            return compose(variable(Var::X), variable(Var::Y) + term(b, k, 0));
        return compose(variable(Var::X) + term(b, 0, k), variable(Var::Y));
    }

    bool operator<(const Poly2& o) const { return terms_ < o.terms_; }

private:
    TermMap terms_;
};

/// 2x2 rational matrix acting on (x, y); row r is the image of the r-th variable.
struct Mat2 {
    Rational a, b, c, d;  // x -> a*x + b*y,  y -> c*x + d*y
    Rational det() const { return a * d - b * c; }
};

inline Poly2 linear_change(const Poly2& p, const Mat2& m) {
    if (m.det() == 0) throw std::invalid_argument("linear_change: singular matrix");
    Poly2 xs = Poly2::term(m.a, 1, 0) + Poly2::term(m.b, 0, 1);
    Poly2 ys = Poly2::term(m.c, 1, 0) + Poly2::term(m.d, 0, 1);
    return p.compose(xs, ys);
}

inline Poly2 jacobian_det(const Poly2& f, const Poly2& g) {
    return f.derivative(Var::X) * g.derivative(Var::Y) - f.derivative(Var::Y) * g.derivative(Var::X);
}

inline std::vector<Monomial> support(const Poly2& p) {
    if (p.is_zero()) throw std::domain_error("support of the zero polynomial");
    std::vector<Monomial> s;
    s.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) s.push_back(m);
    return s;
}

/// Exact division: if q divides p, stores p/q and returns true.
inline bool try_divide_exact(const Poly2& p, const Poly2& q, Poly2* quotient) {
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly2 rem = p;
    Poly2 quot;
    // leading term of q in grlex-descending order
    GrlexDesc less;
    auto leading = [&](const Poly2& u) {
        auto best = u.terms().begin();
        for (auto it = u.terms().begin(); it != u.terms().end(); ++it)
            if (less(it->first, best->first)) best = it;
        return *best;
    };
    const auto [qm, qc] = leading(q);
    while (!rem.is_zero()) {
        const auto [rm, rc] = leading(rem);
        if (rm.i < qm.i || rm.j < qm.j) return false;
        Monomial f{rm.i - qm.i, rm.j - qm.j};
        Rational fc = rc / qc;
        Poly2 t = Poly2::term(fc, f.i, f.j);
        quot += t;
        rem -= t * q;
    }
    if (quotient) *quotient = quot;
    return true;
}

inline std::string format_term(const Rational& c, const Monomial& m, bool leading) {
    std::ostringstream os;
    Rational a = c;
    if (a < 0) {
        os << (leading ? "-" : " - ");
        a = -a;
    } else if (!leading) {
        os << " + ";
    }
    bool has_vars = m.i > 0 || m.j > 0;
    if (!has_vars) {
        os << to_string(a);
        return os.str();
    }
    bool star = false;
    if (a != 1) {
        os << to_string(a);
        star = true;
    }
    if (m.i > 0) {
        if (star) os << "*";
        os << "x";
        if (m.i > 1) os << "^" << m.i;
        star = true;
    }
    if (m.j > 0) {
        if (star) os << "*";
        os << "y";
        if (m.j > 1) os << "^" << m.j;
    }
    return os.str();
}

/// Canonical text form: graded lexicographic, x before y, descending.
inline std::string format_poly(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(),
              [](const auto& a, const auto& b) { return GrlexDesc{}(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        out += format_term(c, m, first);
        first = false;
    }
    return out;
}

}  // namespace jacpair
