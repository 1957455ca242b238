#pragma once

#include <map>
#include <vector>

#include "bigint.hpp"
#include "padic.hpp"
#include "polynomial.hpp"

namespace gcdval {

// The attained set V of v_p(gcd(f(n), g(n))) over all integers n, with the
// smallest nonnegative witness for each value.
struct ValuationProfile {
    unsigned long p = 0;
    unsigned long s_min = 0;
    unsigned long S_max = 0;
    std::vector<unsigned long> attained;   // sorted, nonempty
    std::map<unsigned long, Int> witnesses;  // value -> smallest n >= 0
};

// Pruned residue-class search. Requires monic f, g and resultant != 0; the
// caller may pass a precomputed resultant to avoid recomputation.
ValuationProfile valuation_profile(const IntPolynomial& f,
                                   const IntPolynomial& g, unsigned long p);
ValuationProfile valuation_profile(const IntPolynomial& f,
                                   const IntPolynomial& g, unsigned long p,
                                   const Int& resultant_value);

// Prime factorization of |n|, n != 0, primes ascending. Trial division up to
// 10^6; a remaining cofactor above 10^12 cannot be certified prime and raises
// GuardExceededError.
std::vector<std::pair<Int, unsigned long>> factorize(const Int& n);

// All positive divisors of |n|, sorted.
std::vector<Int> all_divisors(const Int& n);

// { gcd(f(n), g(n)) : n in Z } as the CRT product set over primes p | r of
// { p^e : e in V_p }. Sorted ascending.
std::vector<Int> gcd_value_range(const IntPolynomial& f,
                                 const IntPolynomial& g);
std::vector<Int> gcd_value_range(const IntPolynomial& f,
                                 const IntPolynomial& g,
                                 const Int& resultant_value);

}  // namespace gcdval
