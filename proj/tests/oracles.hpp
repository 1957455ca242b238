#pragma once

// Slow reference implementations the tests use to cross-check the library.
// Everything here favors obviousness over speed.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "bigint.hpp"
#include "matrix.hpp"
#include "padic.hpp"
#include "polynomial.hpp"
#include "valuation_range.hpp"

namespace oracle {

using gcdval::Int;
using gcdval::IntegerMatrix;
using gcdval::IntPolynomial;

// Cofactor-expansion determinant; usable up to ~8x8.
inline Int determinant_cofactor(const IntegerMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m.at(0, 0);
    Int det = 0;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        IntegerMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, mc++) = m.at(r, c);
            }
        }
        det += sign * m.at(0, j) * determinant_cofactor(minor);
        sign = -sign;
    }
    return det;
}

// v_p(j!) computed from the factorial itself.
inline unsigned long alpha_factorial(unsigned long j, unsigned long p) {
    Int fact = 1;
    for (unsigned long i = 2; i <= j; ++i) fact *= i;
    return gcdval::vp(fact, p).value;
}

// min(v_p(f(n)), v_p(g(n))) by direct evaluation.
inline gcdval::Valuation pair_valuation(const IntPolynomial& f,
                                        const IntPolynomial& g, const Int& n,
                                        unsigned long p) {
    return gcdval::min(gcdval::vp(f.evaluate(n), p),
                       gcdval::vp(g.evaluate(n), p));
}

struct NaiveProfile {
    std::vector<unsigned long> attained;
    std::map<unsigned long, Int> witnesses;  // value -> smallest n in period
};

// Enumerates one full period n in [0, p^(v_p(r)+1)). The truncated valuation
// function is periodic with that modulus, so the attained set and smallest
// witnesses over all of Z are captured exactly (given r != 0).
inline NaiveProfile naive_profile(const IntPolynomial& f,
                                  const IntPolynomial& g, unsigned long p) {
    Int r = gcdval::resultant(f, g);
    unsigned long cap = gcdval::vp(r, p).value;
    Int period = gcdval::pow_ui(p, cap + 1);
    NaiveProfile out;
    for (Int n = 0; n < period; ++n) {
        gcdval::Valuation v = pair_valuation(f, g, n, p);
        if (!v.finite) continue;  // impossible when r != 0
        out.witnesses.emplace(v.value, n);
    }
    for (const auto& [value, witness] : out.witnesses) {
        (void)witness;
        out.attained.push_back(value);
    }
    return out;
}

// { gcd(f(n), g(n)) } over one combined period of every prime dividing r.
inline std::set<Int> naive_gcd_range(const IntPolynomial& f,
                                     const IntPolynomial& g) {
    Int r = gcdval::resultant(f, g);
    Int period = 1;
    for (const auto& [prime, exp] : gcdval::factorize(r)) {
        (void)exp;
        unsigned long p = mpz_get_ui(prime.get_mpz_t());
        period *= gcdval::pow_ui(p, gcdval::vp(r, p).value + 1);
    }
    std::set<Int> out;
    for (Int n = 0; n < period; ++n) {
        Int d;
        mpz_gcd(d.get_mpz_t(), f.evaluate(n).get_mpz_t(),
                g.evaluate(n).get_mpz_t());
        out.insert(d);
    }
    return out;
}

// max over t <= limit of B(s+t) - 2 B(t) - s, exhaustively.
inline long long brute_general_bound(unsigned long p, unsigned long s,
                                     unsigned long limit) {
    gcdval::PadicTables tables(p);
    long long best = 0;
    bool first = true;
    for (unsigned long t = 0; t <= limit; ++t) {
        long long value = static_cast<long long>(tables.big_b(s + t)) -
                          2 * static_cast<long long>(tables.big_b(t)) -
                          static_cast<long long>(s);
        if (first || value > best) {
            best = value;
            first = false;
        }
    }
    return best;
}

}  // namespace oracle
