#include "report.hpp"

#include "errors.hpp"
#include "padic.hpp"
#include "version.hpp"

namespace gcdval {

Json document(const std::string& command, Json inputs, Json result) {
    Json doc;
    doc["tool"] = "gcdval";
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = std::move(result);
    return doc;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

Json profile_json(const ValuationProfile& profile) {
    Json j;
    j["p"] = profile.p;
    j["s"] = profile.s_min;
    j["S"] = profile.S_max;
    j["attained"] = profile.attained;
    Json witnesses = Json::object();
    for (const auto& [value, witness] : profile.witnesses)
        witnesses[std::to_string(value)] = witness.get_str();
    j["witnesses"] = std::move(witnesses);
    return j;
}

Json bounds_json(const BoundReport& report) {
    Json j;
    j["p"] = report.p;
    j["s"] = report.s;
    j["S"] = report.S;
    j["v_r"] = report.v_r;
    j["lb_general"] = Json{{"value", report.general.value},
                           {"t", report.general.t}};
    j["lb_small"] = report.small ? Json(*report.small) : Json(nullptr);
    j["slack"] = report.slack;
    j["equality_small"] = report.equality_small;
    j["interval_ok"] =
        report.interval_ok ? Json(*report.interval_ok) : Json(nullptr);
    return j;
}

namespace {

Json quotient_group_json(const IntPolynomial& f, const IntPolynomial& g) {
    Json factors = Json::array();
    for (const Int& d : quotient_group(f, g)) factors.push_back(d.get_str());
    return factors;
}

}  // namespace

Json analyze_json(const IntPolynomial& f, const IntPolynomial& g,
                  unsigned long p) {
    AnalyzeResult analysis = analyze_full(f, g, p);
    Json j;
    j["resultant"] = analysis.resultant.get_str();
    j["quotient_group"] = quotient_group_json(f, g);
    j["profile"] = profile_json(analysis.profile);
    j["bounds"] = bounds_json(analysis.report);
    return j;
}

Json analyze_all_primes_json(const IntPolynomial& f, const IntPolynomial& g) {
    Int r = resultant(f, g);
    if (r == 0)
        throw ZeroResultantError(
            "analyze: zero resultant (f and g share a factor)");
    Json j;
    j["resultant"] = r.get_str();
    j["quotient_group"] = quotient_group_json(f, g);
    Json primes = Json::array();
    for (const auto& [prime, exp] : factorize(r)) {
        (void)exp;
        ValuationProfile profile = valuation_profile(f, g, prime.get_ui(), r);
        BoundReport report = bounds_from_profile(profile, r);
        Json entry;
        entry["profile"] = profile_json(profile);
        entry["bounds"] = bounds_json(report);
        primes.push_back(std::move(entry));
    }
    j["primes"] = std::move(primes);
    Json range = Json::array();
    for (const Int& d : gcd_value_range(f, g, r)) range.push_back(d.get_str());
    j["gcd_value_range"] = std::move(range);
    return j;
}

Json construct_json(const Construction& construction, bool* certified) {
    Certification cert = certify(construction);
    if (certified) *certified = cert.certified;
    const ConstructionSpec& spec = construction.spec;
    Json j;
    j["kind"] = spec.kind;
    j["p"] = spec.p;
    j["s"] = spec.s;
    if (spec.S) j["S"] = *spec.S;
    j["case"] = spec.case_label;
    if (!spec.note.empty()) j["note"] = spec.note;
    j["f"] = construction.f.str();
    j["g"] = construction.g.str();
    j["expected"] = Json{{"min", spec.expected.min},
                         {"max", spec.expected.max},
                         {"v_r", spec.expected.v_r}};
    Json c;
    c["resultant"] = cert.resultant.get_str();
    c["v_r"] = cert.v_r;
    c["s"] = cert.s_observed;
    c["S"] = cert.S_observed;
    c["match_min"] = cert.match_min;
    c["match_max"] = cert.match_max;
    c["match_v_r"] = cert.match_v_r;
    c["equality_small"] =
        cert.equality_small ? Json(*cert.equality_small) : Json(nullptr);
    c["interval_ok"] =
        cert.interval_ok ? Json(*cert.interval_ok) : Json(nullptr);
    c["certified"] = cert.certified;
    j["certification"] = std::move(c);
    return j;
}

Json verify_json(const SuiteReport& report) {
    Json j;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["completed"] = report.completed;
    j["max_deg"] = report.max_deg;
    j["coeff_bound"] = report.coeff_bound;
    Json checks;
    for (const auto& [name, stats] : report.checks)
        checks[name] =
            Json{{"passed", stats.passed}, {"failed", stats.failed}};
    j["checks"] = std::move(checks);
    if (report.first_failure) {
        const FirstFailure& ff = *report.first_failure;
        j["first_failure"] = Json{{"trial", ff.trial},
                                  {"f", ff.f},
                                  {"g", ff.g},
                                  {"check", ff.check},
                                  {"detail", ff.detail}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

Json tables_json(unsigned long p, unsigned long max_s) {
    PadicTables tables(p);
    Json j;
    j["p"] = p;
    j["max_s"] = max_s;
    Json alpha = Json::array();
    for (unsigned long i = 0; i <= tables.beta(max_s); ++i)
        alpha.push_back(tables.alpha(i));
    Json beta = Json::array();
    for (unsigned long m = 1; m <= max_s; ++m) beta.push_back(tables.beta(m));
    Json big_b = Json::array();
    for (unsigned long s = 1; s <= max_s; ++s) big_b.push_back(tables.big_b(s));
    j["alpha"] = std::move(alpha);
    j["beta"] = std::move(beta);
    j["bigB"] = std::move(big_b);
    return j;
}

Json kempner_json(unsigned long p, unsigned long s,
                  std::optional<unsigned long> S, bool* match) {
    PadicTables tables(p);
    Int count, expected;
    if (S) {
        count = count_R(p, *S, s);
        expected = pow_ui(p, *S - s + tables.big_b(s));
    } else {
        count = count_poly_functions(p, s);
        expected = pow_ui(p, tables.big_b(s));
    }
    bool equal = (count == expected);
    if (match) *match = equal;
    Json j;
    j["p"] = p;
    j["s"] = s;
    if (S) j["S"] = *S;
    j["count"] = count.get_str();
    j["expected"] = expected.get_str();
    j["match"] = equal;
    return j;
}

}  // namespace gcdval
