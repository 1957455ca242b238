#include "padic.hpp"

#include "errors.hpp"

namespace gcdval {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    // Bounded deterministic trial division: d stays <= 10^6.
    if (p > 1000000000000UL)
        throw GuardExceededError("is_prime: " + std::to_string(p) +
                                 " exceeds the trial-division guard (10^12)");
    for (unsigned long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_prime(unsigned long p, const std::string& context) {
    if (!is_prime(p))
        throw NotPrimeError(context + ": " + std::to_string(p) +
                            " is not prime");
}

Valuation vp(const Int& n, unsigned long p) {
    require_prime(p, "vp");
    if (n == 0) return Valuation::infinity();
    Int rem;
    Int prime(static_cast<unsigned long>(p));
    unsigned long v =
        mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
    return Valuation::of(v);
}

unsigned long alpha(unsigned long j, unsigned long p) {
    require_prime(p, "alpha");
    unsigned long total = 0;
    for (unsigned long q = j / p; q > 0; q /= p) total += q;
    return total;
}

unsigned long beta(unsigned long m, unsigned long p) {
    PadicTables tables(p);
    return tables.beta(m);
}

unsigned long big_b(unsigned long s, unsigned long p) {
    PadicTables tables(p);
    return tables.big_b(s);
}

PadicTables::PadicTables(unsigned long p) : p_(p) {
    require_prime(p, "PadicTables");
    beta_.push_back(0);
    big_b_.push_back(0);
}

unsigned long PadicTables::alpha(unsigned long j) const {
    unsigned long total = 0;
    for (unsigned long q = j / p_; q > 0; q /= p_) total += q;
    return total;
}

void PadicTables::extend(unsigned long m) {
    // alpha is nondecreasing and alpha(pm) >= m, so the scan for beta(m)
    // resumes from beta(m-1) and stops no later than j = p*m.
    while (beta_.size() <= m) {
        unsigned long target = beta_.size();
        unsigned long j = beta_.back();
        while (alpha(j) < target) ++j;
        beta_.push_back(j);
        big_b_.push_back(big_b_.back() + j);
    }
}

unsigned long PadicTables::beta(unsigned long m) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(m);
    return beta_[m];
}

unsigned long PadicTables::big_b(unsigned long s) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(s);
    return big_b_[s];
}

}  // namespace gcdval
