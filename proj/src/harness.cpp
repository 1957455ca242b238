#include "harness.hpp"

#include <algorithm>
#include <fstream>

#include "bounds.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "valuation_range.hpp"

namespace gcdval {

namespace {

bool contains(const std::vector<Int>& sorted, const Int& v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

PairChecks check_pair(const IntPolynomial& f, const IntPolynomial& g,
                      long coeff_bound) {
    PairChecks out;
    auto fail = [&](PairChecks::Outcome& o, const std::string& name,
                    const std::string& detail) {
        o.ok = false;
        if (out.failed_check.empty()) {
            out.failed_check = name;
            out.detail = detail;
        }
    };

    Int r = resultant(f, g);
    if (r == 0)
        throw ZeroResultantError("check_pair: zero resultant");
    Int abs_r = abs(r);

    auto factors = factorize(abs_r);
    std::vector<ValuationProfile> profiles;
    for (const auto& [prime, exp] : factors) {
        (void)exp;
        profiles.push_back(valuation_profile(f, g, prime.get_ui(), r));
    }

    // gcd(f(n), g(n)) | r on a window of n plus every stored witness.
    out.divides_resultant.applicable = true;
    std::vector<Int> samples;
    for (long n = -coeff_bound; n <= coeff_bound; ++n) samples.push_back(Int(n));
    for (const auto& prof : profiles)
        for (const auto& [value, witness] : prof.witnesses) {
            (void)value;
            samples.push_back(witness);
        }
    for (const Int& n : samples) {
        Int d = gcd(f.evaluate(n), g.evaluate(n));
        if (!mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t())) {
            fail(out.divides_resultant, "divides_resultant",
                 "gcd at n = " + n.get_str() + " is " + d.get_str() +
                     ", which does not divide r = " + r.get_str());
            break;
        }
    }

    std::vector<Int> range = gcd_value_range(f, g, r);

    bool squarefree = std::all_of(factors.begin(), factors.end(),
                                  [](const auto& pe) { return pe.second == 1; });
    if (squarefree) {
        out.squarefree_range.applicable = true;
        if (range != all_divisors(abs_r))
            fail(out.squarefree_range, "squarefree_range",
                 "|r| = " + abs_r.get_str() +
                     " is squarefree but the range misses a divisor");
    }

    bool has_pp = std::any_of(factors.begin(), factors.end(), [](const auto& pe) {
        return pe.second >= pe.first;
    });
    if (!has_pp) {
        out.coprime_reachable.applicable = true;
        if (!contains(range, Int(1)))
            fail(out.coprime_reachable, "coprime_reachable",
                 "r = " + r.get_str() +
                     " has no divisor of the form p^p but 1 is not attained");
    }

    if (contains(range, abs_r)) {
        out.divisor_closure.applicable = true;
        for (const Int& d : all_divisors(abs_r))
            if (!contains(range, d)) {
                fail(out.divisor_closure, "divisor_closure",
                     "|r| = " + abs_r.get_str() + " is attained but its divisor " +
                         d.get_str() + " is not");
                break;
            }
    }

    out.bounds_slack.applicable = true;
    for (const auto& prof : profiles) {
        try {
            BoundReport report = bounds_from_profile(prof, r);
            if (report.slack < 0) {
                fail(out.bounds_slack, "bounds_slack",
                     "negative slack at p = " + std::to_string(prof.p));
                break;
            }
        } catch (const TheoremViolationError& e) {
            fail(out.bounds_slack, "bounds_slack", e.what());
            break;
        }
    }
    return out;
}

IntPolynomial random_monic(Rng& rng, unsigned long max_deg, long coeff_bound) {
    unsigned long deg = 1 + rng.below(max_deg);
    std::vector<Int> coeffs(deg + 1);
    for (unsigned long i = 0; i < deg; ++i)
        coeffs[i] = Int(static_cast<long>(rng.uniform(-coeff_bound, coeff_bound)));
    coeffs[deg] = 1;
    return IntPolynomial::from_coefficients(std::move(coeffs));
}

SuiteReport random_property_suite(std::uint64_t seed, unsigned long trials,
                                  unsigned long max_deg, long coeff_bound,
                                  const std::string& csv_path) {
    SuiteReport report;
    report.seed = seed;
    report.trials = trials;
    report.max_deg = max_deg;
    report.coeff_bound = coeff_bound;
    report.checks = {{"divides_resultant", {}},
                     {"squarefree_range", {}},
                     {"coprime_reachable", {}},
                     {"divisor_closure", {}},
                     {"bounds_slack", {}}};

    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw Error("cannot open csv path: " + csv_path);
        csv << "trial,f,g,resultant,ok\n";
    }

    Rng rng(seed);
    for (unsigned long trial = 0; trial < trials; ++trial) {
        IntPolynomial f, g;
        for (;;) {
            f = random_monic(rng, max_deg, coeff_bound);
            g = random_monic(rng, max_deg, coeff_bound);
            if (resultant(f, g) != 0) break;
        }
        PairChecks checks = check_pair(f, g, coeff_bound);
        report.completed = trial + 1;

        auto tally = [&](const char* name, const PairChecks::Outcome& o) {
            if (!o.applicable) return;
            for (auto& [key, stats] : report.checks)
                if (key == name) {
                    if (o.ok)
                        ++stats.passed;
                    else
                        ++stats.failed;
                }
        };
        tally("divides_resultant", checks.divides_resultant);
        tally("squarefree_range", checks.squarefree_range);
        tally("coprime_reachable", checks.coprime_reachable);
        tally("divisor_closure", checks.divisor_closure);
        tally("bounds_slack", checks.bounds_slack);

        if (csv.is_open())
            csv << trial << ",\"" << f.str() << "\",\"" << g.str() << "\","
                << resultant(f, g).get_str() << "," << (checks.ok() ? 1 : 0)
                << "\n";

        if (!checks.ok()) {
            report.first_failure = FirstFailure{trial, f.str(), g.str(),
                                                checks.failed_check,
                                                checks.detail};
            break;
        }
    }
    return report;
}

}  // namespace gcdval
