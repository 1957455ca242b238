#include "bounds.hpp"

#include "errors.hpp"
#include "matrix.hpp"
#include "padic.hpp"

namespace gcdval {

GeneralBound lb_general(unsigned long p, unsigned long s) {
    PadicTables tables(p);
    GeneralBound best{static_cast<long long>(tables.big_b(s)) -
                          static_cast<long long>(s),
                      0};
    unsigned long t_cap = 2 * p * s + 2;
    for (unsigned long t = 1; t <= t_cap; ++t) {
        long long value = static_cast<long long>(tables.big_b(s + t)) -
                          2 * static_cast<long long>(tables.big_b(t)) -
                          static_cast<long long>(s);
        if (value > best.value) best = {value, t};
    }
    return best;
}

long long lb_small(unsigned long p, unsigned long s) {
    require_prime(p, "lb_small");
    if (s > p)
        throw UnsupportedCaseError(
            "lb_small: requires s <= p (got s = " + std::to_string(s) +
            ", p = " + std::to_string(p) + ")");
    long long ls = static_cast<long long>(s);
    return static_cast<long long>(p) * ls * ls - ls;
}

BoundReport bounds_from_profile(const ValuationProfile& profile,
                                const Int& resultant_value) {
    BoundReport report;
    report.p = profile.p;
    report.s = profile.s_min;
    report.S = profile.S_max;
    report.v_r = vp(resultant_value, profile.p).value;
    report.general = lb_general(profile.p, profile.s_min);

    long long gap = static_cast<long long>(report.v_r) -
                    static_cast<long long>(report.S);
    long long best_bound = report.general.value;
    if (report.s <= report.p) {
        report.small = lb_small(report.p, report.s);
        if (*report.small > best_bound) best_bound = *report.small;
    }
    report.slack = gap - best_bound;
    if (report.slack < 0)
        throw TheoremViolationError(
            "bounds: v_p(r) - S = " + std::to_string(gap) +
            " is below the proven lower bound " + std::to_string(best_bound) +
            " (p = " + std::to_string(report.p) +
            ", s = " + std::to_string(report.s) + ")");

    long long ls = static_cast<long long>(report.s);
    report.equality_small =
        (gap == static_cast<long long>(report.p) * ls * ls - ls);
    if (report.equality_small && report.s <= report.p) {
        // Under equality the attained set must be the full interval [s, S];
        // it is a subset of it with distinct sorted entries, so counting
        // suffices.
        bool full = profile.attained.size() == report.S - report.s + 1;
        report.interval_ok = full;
        if (!full)
            throw TheoremViolationError(
                "bounds: equality case misses a value in [s, S] (p = " +
                std::to_string(report.p) + ", s = " + std::to_string(report.s) +
                ", S = " + std::to_string(report.S) + ")");
    }
    return report;
}

AnalyzeResult analyze_full(const IntPolynomial& f, const IntPolynomial& g,
                           unsigned long p) {
    AnalyzeResult out;
    out.resultant = resultant(f, g);
    out.profile = valuation_profile(f, g, p, out.resultant);
    out.report = bounds_from_profile(out.profile, out.resultant);
    return out;
}

BoundReport analyze(const IntPolynomial& f, const IntPolynomial& g,
                    unsigned long p) {
    return analyze_full(f, g, p).report;
}

}  // namespace gcdval
