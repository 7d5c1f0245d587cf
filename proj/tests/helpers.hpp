#pragma once

#include "jacpair/parse.hpp"
#include "jacpair/poly.hpp"

#include <random>

namespace jacpair::testing {

inline Poly2 P(const std::string& text) { return parse_poly(text); }

inline Rational random_rational(std::mt19937_64& rng, int num_bound, int max_den = 1) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Poly2 random_poly(std::mt19937_64& rng, int max_deg, int max_terms, int coeff_bound,
                         int max_den = 1, bool nonzero = true) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly2 p;
    do {
        p = Poly2();
        int n = nterms(rng);
        for (int k = 0; k < n; ++k) {
            int i = deg(rng);
            std::uniform_int_distribution<int> jdist(0, max_deg - i);
            int j = jdist(rng);
            Rational c = random_rational(rng, coeff_bound, max_den);
            p.add_term({i, j}, c);
        }
    } while (nonzero && p.is_zero());
    return p;
}

inline Mat2 random_invertible(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> c(-bound, bound);
    while (true) {
        Mat2 m{Rational(c(rng)), Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
        if (m.det() != 0) return m;
    }
}

}  // namespace jacpair::testing
