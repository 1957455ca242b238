#include "valuation_range.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "errors.hpp"
#include "matrix.hpp"

namespace gcdval {

namespace {

// Residue-class search guard: the level-1 pass scans all residues mod p.
constexpr unsigned long kMaxProfilePrime = 100000000UL;

// f reduced mod p for word-size Horner evaluation (p <= 10^8, so products
// fit in 64 bits).
std::vector<std::uint64_t> reduce_mod(const IntPolynomial& f,
                                      unsigned long p) {
    std::vector<std::uint64_t> out;
    out.reserve(f.coefficients().size());
    Int prime(p);
    for (const Int& c : f.coefficients()) {
        Int r = c % prime;
        if (r < 0) r += prime;
        out.push_back(r.get_ui());
    }
    return out;
}

std::uint64_t horner_mod(const std::vector<std::uint64_t>& coeffs,
                         std::uint64_t n, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = (acc * n + *it) % p;
    return acc;
}

// The set { i in Z/p : v_p(f(c + i*p^k)) >= k+1 }, for k >= 1 and
// v_p(f(c)) >= k. Since f(c+t) == f(c) + t*f'(c) mod t^2 and (p^k)^2 is
// divisible by p^(k+1) when k >= 1, the condition is the linear congruence
// u + i*d == 0 mod p with u = (f(c)/p^k) mod p and d = f'(c) mod p.
struct LiftSet {
    bool all = false;
    std::optional<unsigned long> single;  // meaningful when !all

    bool contains(unsigned long i) const {
        return all || (single && *single == i);
    }
};

LiftSet lift_solutions(const IntPolynomial& f, const IntPolynomial& fprime,
                       const Int& c, unsigned long p, const Int& pk) {
    Int value = f.evaluate(c);
    Int u_big;
    mpz_divexact(u_big.get_mpz_t(), value.get_mpz_t(), pk.get_mpz_t());
    Int prime(p);
    Int u = u_big % prime;
    if (u < 0) u += prime;
    Int d = fprime.evaluate(c) % prime;
    if (d < 0) d += prime;
    LiftSet out;
    if (d == 0) {
        out.all = (u == 0);
        return out;
    }
    // i = -u * d^(-1) mod p
    Int inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), prime.get_mpz_t());
    Int i = (-u * inv) % prime;
    if (i < 0) i += prime;
    out.single = i.get_ui();
    return out;
}

struct ProfileSearch {
    const IntPolynomial& f;
    const IntPolynomial& g;
    IntPolynomial fprime, gprime;
    unsigned long p;
    unsigned long cap;  // v_p(r) + 1: every class must resolve by this level
    std::map<unsigned long, Int> best;

    void record(unsigned long value, const Int& center) {
        auto [it, inserted] = best.emplace(value, center);
        if (!inserted && center < it->second) it->second = center;
    }

    // Class {n == c mod p^k} with both valuations at c known to be >= k.
    // Members n of a child class at level k+1 have v_p(f(n)) pinned to k
    // whenever v_p(f(child center)) == k, so a child resolves (with value
    // exactly k) unless both lifted valuations reach k+1.
    void descend(const Int& c, unsigned long k) {
        if (k >= cap)
            throw TheoremViolationError(
                "valuation_profile: class unresolved at level v_p(r)+1; "
                "this contradicts gcd(f(n), g(n)) | r");
        Int pk = pow_ui(p, k);
        LiftSet from_f = lift_solutions(f, fprime, c, p, pk);
        LiftSet from_g = lift_solutions(g, gprime, c, p, pk);
        LiftSet unresolved;
        if (from_f.all)
            unresolved = from_g;
        else if (from_g.all)
            unresolved = from_f;
        else if (from_f.single && from_g.single &&
                 *from_f.single == *from_g.single)
            unresolved.single = from_f.single;

        if (!unresolved.all) {
            unsigned long resolved_i =
                (unresolved.single && *unresolved.single == 0) ? 1 : 0;
            record(k, c + Int(resolved_i) * pk);
            if (unresolved.single)
                descend(c + Int(*unresolved.single) * pk, k + 1);
        } else {
            Int child = c;
            for (unsigned long i = 0; i < p; ++i) {
                descend(child, k + 1);
                child += pk;
            }
        }
    }
};

}  // namespace

ValuationProfile valuation_profile(const IntPolynomial& f,
                                   const IntPolynomial& g, unsigned long p,
                                   const Int& resultant_value) {
    require_prime(p, "valuation_profile");
    if (!f.is_monic())
        throw NotMonicError("valuation_profile: f is not monic");
    if (!g.is_monic())
        throw NotMonicError("valuation_profile: g is not monic");
    if (resultant_value == 0)
        throw ZeroResultantError(
            "valuation_profile: zero resultant (f and g share a factor)");

    ValuationProfile prof;
    prof.p = p;

    unsigned long v_r = vp(resultant_value, p).value;
    if (v_r == 0 || f.degree() == 0 || g.degree() == 0) {
        // Every class resolves at level 1 with value 0: v_p(gcd) <= v_p(r),
        // and a monic constant evaluates to 1 everywhere.
        prof.attained = {0};
        prof.witnesses.emplace(0, Int(0));
        prof.s_min = prof.S_max = 0;
        return prof;
    }
    if (p > kMaxProfilePrime)
        throw GuardExceededError(
            "valuation_profile: prime " + std::to_string(p) +
            " exceeds the residue-scan guard (10^8)");

    ProfileSearch search{f,       g, f.derivative(), g.derivative(),
                         p,       v_r + 1,
                         {}};

    // Level 1: the classes needing refinement are the common roots of f and
    // g mod p; every other residue resolves with value 0.
    std::vector<std::uint64_t> fw = reduce_mod(f, p);
    std::vector<std::uint64_t> gw = reduce_mod(g, p);
    bool zero_seen = false;
    std::vector<unsigned long> common_roots;
    for (unsigned long c = 0; c < p; ++c) {
        if (horner_mod(fw, c, p) == 0 && horner_mod(gw, c, p) == 0) {
            common_roots.push_back(c);
        } else if (!zero_seen) {
            search.record(0, Int(c));
            zero_seen = true;
        }
    }
    for (unsigned long c : common_roots) search.descend(Int(c), 1);

    prof.witnesses = std::move(search.best);
    for (const auto& [value, witness] : prof.witnesses)
        prof.attained.push_back(value);
    prof.s_min = prof.attained.front();
    prof.S_max = prof.attained.back();
    return prof;
}

ValuationProfile valuation_profile(const IntPolynomial& f,
                                   const IntPolynomial& g, unsigned long p) {
    return valuation_profile(f, g, p, resultant(f, g));
}

std::vector<std::pair<Int, unsigned long>> factorize(const Int& n) {
    if (n == 0) throw Error("factorize: zero has no factorization");
    Int rem = abs(n);
    std::vector<std::pair<Int, unsigned long>> factors;
    auto strip = [&](const Int& d) {
        if (!mpz_divisible_p(rem.get_mpz_t(), d.get_mpz_t())) return;
        unsigned long e =
            mpz_remove(rem.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t());
        factors.emplace_back(d, e);
    };
    strip(Int(2));
    for (Int d(3); d <= 1000000 && d * d <= rem; d += 2) strip(d);
    if (rem > 1) {
        // No factor <= 10^6 remains, so rem <= 10^12 is certainly prime.
        if (rem > Int("1000000000000"))
            throw GuardExceededError(
                "factorize: cofactor " + rem.get_str() +
                " exceeds the trial-division guard (10^12)");
        factors.emplace_back(rem, 1);
    }
    return factors;
}

std::vector<Int> all_divisors(const Int& n) {
    std::vector<Int> divisors{Int(1)};
    for (const auto& [prime, exp] : factorize(n)) {
        std::size_t base = divisors.size();
        Int power(1);
        for (unsigned long e = 1; e <= exp; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i)
                divisors.push_back(divisors[i] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

std::vector<Int> gcd_value_range(const IntPolynomial& f,
                                 const IntPolynomial& g,
                                 const Int& resultant_value) {
    if (resultant_value == 0)
        throw ZeroResultantError(
            "gcd_value_range: zero resultant (f and g share a factor)");
    std::vector<Int> range{Int(1)};
    if (resultant_value == 1 || resultant_value == -1) return range;
    for (const auto& [prime, exp] : factorize(resultant_value)) {
        (void)exp;
        ValuationProfile prof =
            valuation_profile(f, g, prime.get_ui(), resultant_value);
        std::vector<Int> next;
        next.reserve(range.size() * prof.attained.size());
        for (const Int& d : range)
            for (unsigned long e : prof.attained)
                next.push_back(d * pow_ui(prime, e));
        std::sort(next.begin(), next.end());
        range = std::move(next);
    }
    return range;
}

std::vector<Int> gcd_value_range(const IntPolynomial& f,
                                 const IntPolynomial& g) {
    if (!f.is_monic()) throw NotMonicError("gcd_value_range: f is not monic");
    if (!g.is_monic()) throw NotMonicError("gcd_value_range: g is not monic");
    return gcd_value_range(f, g, resultant(f, g));
}

}  // namespace gcdval
