#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rng.hpp"

namespace gcdval {

// One pair run through the divisibility/range/bound checks. A conditional
// check that does not apply to the pair is reported as not applicable rather
// than passed.
struct PairChecks {
    struct Outcome {
        bool applicable = false;
        bool ok = true;
    };
    Outcome divides_resultant;   // gcd(f(n), g(n)) | r on sampled n
    Outcome squarefree_range;    // |r| squarefree => range = divisors(|r|)
    Outcome coprime_reachable;   // no p^p | r => 1 in range
    Outcome divisor_closure;     // |r| in range => all divisors in range
    Outcome bounds_slack;        // slack >= 0 for every p | r

    std::string failed_check;  // first failing check name, empty if none
    std::string detail;

    bool ok() const { return failed_check.empty(); }
};

PairChecks check_pair(const IntPolynomial& f, const IntPolynomial& g,
                      long coeff_bound);

struct CheckStats {
    unsigned long passed = 0;
    unsigned long failed = 0;
};

struct FirstFailure {
    unsigned long trial = 0;
    std::string f, g, check, detail;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    unsigned long trials = 0;
    unsigned long completed = 0;
    unsigned long max_deg = 0;
    long coeff_bound = 0;
    std::vector<std::pair<std::string, CheckStats>> checks;
    std::optional<FirstFailure> first_failure;

    bool all_passed() const { return !first_failure.has_value(); }
};

// Deterministically seeded monic pairs (degree uniform in [1, max_deg],
// coefficients uniform in [-coeff_bound, coeff_bound], zero resultants
// rejected), each run through check_pair. Stops at the first violation —
// the statements are proved, so a counterexample means a defect here.
// csv_path, when nonempty, receives one row per trial.
SuiteReport random_property_suite(std::uint64_t seed, unsigned long trials,
                                  unsigned long max_deg, long coeff_bound,
                                  const std::string& csv_path = "");

IntPolynomial random_monic(Rng& rng, unsigned long max_deg, long coeff_bound);

}  // namespace gcdval
