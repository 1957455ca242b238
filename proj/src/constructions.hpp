#pragma once

#include <optional>
#include <string>

#include "bounds.hpp"
#include "polynomial.hpp"

namespace gcdval {

struct ConstructionSpec {
    std::string kind;  // "large" (constant profile) | "small" (full interval)
    unsigned long p = 0;
    unsigned long s = 0;
    std::optional<unsigned long> S;  // small kind only
    struct Expected {
        unsigned long min = 0, max = 0, v_r = 0;
    } expected;
    std::string case_label;
    std::string note;  // nonempty when a case substitutes a unified formula
};

struct Construction {
    IntPolynomial f, g;
    ConstructionSpec spec;
};

// f = prod_{j<beta(s)} (x-j), g = p^s + prod_{i<p} (x-i)^(s+1).
// Expected profile {s}, v_p(r) = s*beta(s).
Construction construct_large(unsigned long p, unsigned long s);

// Case list covering 0 <= s <= S (p = 2, s >= 2 additionally needs
// 2s+1 <= S; other combinations raise UnsupportedCaseError).
// Expected profile min s, max S, v_p(r) = p*s^2 - s + S.
Construction construct_small(unsigned long p, unsigned long s,
                             unsigned long S);

struct Certification {
    Int resultant;
    unsigned long v_r = 0;
    unsigned long s_observed = 0;
    unsigned long S_observed = 0;
    bool match_min = false, match_max = false, match_v_r = false;
    std::optional<bool> equality_small;  // small kind with s <= p
    std::optional<bool> interval_ok;
    bool certified = false;
};

// Round-trips the pair through analyze_full and compares against the spec's
// expectations exactly.
Certification certify(const Construction& c);

}  // namespace gcdval
