#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace jacpair {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rat_pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

inline Int floor_rat(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Int ceil_rat(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (r > 0 && q * denominator(r) != numerator(r)) ++q;
    return q;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p" or "p/q" with an optional leading minus; q must be positive.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    }
}

namespace detail {
// Stern-Brocot style search for the unique rational with minimal denominator
// (then minimal |numerator|) in the closed interval [lo, hi], assuming 0 <= lo.
inline Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
    Int fl = floor_rat(lo);
    if (fl >= ceil_rat(lo)) {  // lo is an integer
        return Rational(fl);
    }
    if (fl + 1 <= hi) return Rational(fl + 1);
    // both endpoints share the integer part fl; recurse on reciprocal of the fractional parts
    Rational lo_frac = lo - Rational(fl);
    Rational hi_frac = hi - Rational(fl);
    Rational inner = simplest_nonneg(Rational(1) / hi_frac, Rational(1) / lo_frac);
    return Rational(fl) + Rational(1) / inner;
}
}  // namespace detail

/// The rational with the smallest denominator in [lo, hi] (ties toward smaller numerator).
inline Rational simplest_rational_in(Rational lo, Rational hi) {
    if (lo > hi) std::swap(lo, hi);
    if (lo <= 0 && 0 <= hi) return Rational(0);
    if (hi < 0) return -detail::simplest_nonneg(-hi, -lo);
    return detail::simplest_nonneg(lo, hi);
}

}  // namespace jacpair
