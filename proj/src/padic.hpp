#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace gcdval {

// v_p(n): either a finite non-negative integer or infinity (for n = 0).
struct Valuation {
    bool finite = true;
    unsigned long value = 0;

    static Valuation infinity() { return Valuation{false, 0}; }
    static Valuation of(unsigned long v) { return Valuation{true, v}; }

    bool operator==(const Valuation& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    // Infinity compares greater than every finite valuation.
    bool operator<(const Valuation& o) const {
        if (!finite) return false;
        if (!o.finite) return true;
        return value < o.value;
    }

    std::string str() const { return finite ? std::to_string(value) : "inf"; }
};

inline Valuation min(const Valuation& a, const Valuation& b) {
    return a < b ? a : b;
}

bool is_prime(unsigned long p);
void require_prime(unsigned long p, const std::string& context);

// v_p(n) with v_p(0) = infinity. Negative n uses |n|.
Valuation vp(const Int& n, unsigned long p);

// alpha(j) = v_p(j!) by Legendre's formula.
unsigned long alpha(unsigned long j, unsigned long p);

// beta(m) = min { j >= 0 : alpha(j) >= m }; beta(0) = 0.
unsigned long beta(unsigned long m, unsigned long p);

// B(s) = sum_{m=1}^{s} beta(m).
unsigned long big_b(unsigned long s, unsigned long p);

// Memoizing beta/B evaluator for a fixed prime; safe for concurrent use.
class PadicTables {
public:
    explicit PadicTables(unsigned long p);

    unsigned long p() const { return p_; }
    unsigned long alpha(unsigned long j) const;
    unsigned long beta(unsigned long m);
    unsigned long big_b(unsigned long s);

private:
    void extend(unsigned long m);  // callers hold mu_

    unsigned long p_;
    std::mutex mu_;
    std::vector<unsigned long> beta_;   // beta_[m], beta_[0] = 0
    std::vector<unsigned long> big_b_;  // big_b_[s], big_b_[0] = 0
};

}  // namespace gcdval
