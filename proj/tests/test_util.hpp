#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "qeuler/polynomial.hpp"

namespace qeuler::test {

/// Polynomial from small integer coefficients, lowest degree first.
inline QPolynomial P(std::initializer_list<long> coeffs) {
    std::vector<BigInteger> v;
    for (long c : coeffs) v.emplace_back(c);
    return QPolynomial(std::move(v));
}

/// Random polynomial with degree <= max_deg and coefficients in [lo, hi]; may be zero.
inline QPolynomial random_poly(std::mt19937_64& rng, int max_deg, long lo = -10, long hi = 10) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(lo, hi);
    std::vector<BigInteger> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : v) c = coef(rng);
    return QPolynomial(std::move(v));
}

inline QPolynomial random_nonzero_poly(std::mt19937_64& rng, int max_deg, long lo = -10, long hi = 10) {
    for (;;) {
        auto p = random_poly(rng, max_deg, lo, hi);
        if (!p.is_zero()) return p;
    }
}

}  // namespace qeuler::test
