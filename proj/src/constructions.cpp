#include "constructions.hpp"

#include "errors.hpp"
#include "padic.hpp"

namespace gcdval {

namespace {

IntPolynomial root_power(long root, unsigned long e) {
    return IntPolynomial::linear_root(Int(root)).pow(e);
}

}  // namespace

Construction construct_large(unsigned long p, unsigned long s) {
    require_prime(p, "construct_large");
    unsigned long beta_s = beta(s, p);

    IntPolynomial f(Int(1));
    for (unsigned long j = 0; j < beta_s; ++j)
        f = f * IntPolynomial::linear_root(Int(j));

    IntPolynomial prod(Int(1));
    for (unsigned long i = 0; i < p; ++i)
        prod = prod * root_power(static_cast<long>(i), s + 1);
    IntPolynomial g = IntPolynomial(pow_ui(p, s)) + prod;

    Construction out{std::move(f), std::move(g), {}};
    out.spec.kind = "large";
    out.spec.p = p;
    out.spec.s = s;
    out.spec.expected = {s, s, s * beta_s};
    out.spec.case_label = s == 0 ? "s=0" : "general";
    return out;
}

Construction construct_small(unsigned long p, unsigned long s,
                             unsigned long S) {
    require_prime(p, "construct_small");
    if (s > S)
        throw UnsupportedCaseError("construct_small: requires s <= S (got s = " +
                                   std::to_string(s) +
                                   ", S = " + std::to_string(S) + ")");

    Construction out;
    out.spec.kind = "small";
    out.spec.p = p;
    out.spec.s = s;
    out.spec.S = S;
    out.spec.expected = {s, S, p * s * s - s + S};

    if (s == 0 && S == 0) {
        out.f = IntPolynomial(Int(1));
        out.g = IntPolynomial::x();
        out.spec.case_label = "s=S=0";
        return out;
    }
    if (s == 0) {
        out.f = IntPolynomial::x();
        out.g = IntPolynomial::linear_root(pow_ui(p, S));
        out.spec.case_label = "s=0<S";
        return out;
    }
    if (p == 2 && s == 1) {
        out.f = root_power(0, 1) * root_power(1, 1);
        out.g = IntPolynomial::linear_root(pow_ui(2, S)) * root_power(3, 1);
        out.spec.case_label = "p=2, s=1";
        return out;
    }
    if (p == 2) {
        if (2 * s + 1 > S)
            throw UnsupportedCaseError(
                "construct_small: p = 2 with s >= 2 requires 2s+1 <= S "
                "(got s = " + std::to_string(s) +
                ", S = " + std::to_string(S) + ")");
        out.f = root_power(0, 1) * root_power(2, s - 1) * root_power(1, s);
        out.g = IntPolynomial::linear_root(pow_ui(2, S - 2 * s + 2)) *
                root_power(4, s - 1) * root_power(3, s);
        out.spec.case_label = "p=2, s>=2";
        return out;
    }

    // Odd p, s >= 1: f = x*(x-2p)^(s-1)*prod_{j=1}^{p-1} (x-j)^s,
    //                g = (x-p^(S-s+1))*(x-p)^(s-1)*prod (x-j-p)^s.
    long lp = static_cast<long>(p);
    IntPolynomial f = root_power(0, 1) * root_power(2 * lp, s - 1);
    IntPolynomial g = IntPolynomial::linear_root(pow_ui(p, S - s + 1)) *
                      root_power(lp, s - 1);
    for (long j = 1; j < lp; ++j) {
        f = f * root_power(j, s);
        g = g * root_power(j + lp, s);
    }
    out.f = std::move(f);
    out.g = std::move(g);
    out.spec.case_label = "odd p, s>=1";
    if (s == 1)
        out.spec.note =
            "s=1 instantiates the unified odd-p family, whose f = "
            "x*(x-1)*...*(x-(p-1)) guarantees p | f(n) for every n";
    return out;
}

Certification certify(const Construction& c) {
    AnalyzeResult analysis = analyze_full(c.f, c.g, c.spec.p);
    Certification cert;
    cert.resultant = analysis.resultant;
    cert.v_r = analysis.report.v_r;
    cert.s_observed = analysis.profile.s_min;
    cert.S_observed = analysis.profile.S_max;
    cert.match_min = (cert.s_observed == c.spec.expected.min);
    cert.match_max = (cert.S_observed == c.spec.expected.max);
    cert.match_v_r = (cert.v_r == c.spec.expected.v_r);
    cert.certified = cert.match_min && cert.match_max && cert.match_v_r;
    if (c.spec.kind == "small" && c.spec.s <= c.spec.p) {
        cert.equality_small = analysis.report.equality_small;
        cert.interval_ok = analysis.report.interval_ok;
        cert.certified = cert.certified && analysis.report.equality_small &&
                         analysis.report.interval_ok.value_or(false);
    }
    return cert;
}

}  // namespace gcdval
