#pragma once

#include <optional>

#include "bigint.hpp"
#include "valuation_range.hpp"

namespace gcdval {

struct GeneralBound {
    long long value = 0;
    unsigned long t = 0;  // smallest maximizing t
};

// max over t >= 0 of B(s+t) - 2*B(t) - s. The search stops at t = 2ps+2:
// past that point the step beta(s+t+1) - 2*beta(t+1) <= beta(s) - beta(t+1)
// (beta is subadditive) is negative, since beta(t+1) > (p-1)(t+1) > p*s >=
// beta(s) there, so the sequence strictly decreases.
GeneralBound lb_general(unsigned long p, unsigned long s);

// p*s^2 - s, valid for s <= p only (UnsupportedCaseError otherwise).
long long lb_small(unsigned long p, unsigned long s);

struct BoundReport {
    unsigned long p = 0;
    unsigned long s = 0;
    unsigned long S = 0;
    unsigned long v_r = 0;
    GeneralBound general;
    std::optional<long long> small;       // present iff s <= p
    long long slack = 0;                  // v_r - S - max(applicable bounds)
    bool equality_small = false;          // v_r - S == p*s^2 - s
    std::optional<bool> interval_ok;      // present iff equality_small && s <= p
};

// Evaluates both bounds against a computed profile. Throws
// TheoremViolationError if slack < 0, or if equality holds with s <= p but
// the attained set misses a value in [s, S].
BoundReport bounds_from_profile(const ValuationProfile& profile,
                                const Int& resultant_value);

struct AnalyzeResult {
    Int resultant;
    ValuationProfile profile;
    BoundReport report;
};

AnalyzeResult analyze_full(const IntPolynomial& f, const IntPolynomial& g,
                           unsigned long p);
BoundReport analyze(const IntPolynomial& f, const IntPolynomial& g,
                    unsigned long p);

}  // namespace gcdval
