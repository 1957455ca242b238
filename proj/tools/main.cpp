// Command-line front end; links the public C API only.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "gcdval.h"

namespace {

// Exit codes: 0 success; 1 failed certification/property/internal invariant;
// 2 parse error or bad arguments; 3 zero resultant; 4 non-monic input;
// 5 unsupported parameter combination or guard refusal.
int exit_code(gcdval_status status) {
    switch (status) {
        case GCDVAL_OK:
            return 0;
        case GCDVAL_EPARSE:
        case GCDVAL_ENOTPRIME:
        case GCDVAL_EBADARG:
            return 2;
        case GCDVAL_EZERORESULTANT:
            return 3;
        case GCDVAL_ENOTMONIC:
            return 4;
        case GCDVAL_EUNSUPPORTED:
        case GCDVAL_EGUARD:
            return 5;
        default:
            return 1;
    }
}

int finish(gcdval_status status, char* json) {
    if (status != GCDVAL_OK) {
        std::fprintf(stderr, "error: %s\n", gcdval_last_error());
        return exit_code(status);
    }
    std::fputs(json, stdout);
    gcdval_string_free(json);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact resultant / gcd-valuation analyzer"};
    app.require_subcommand(1);

    std::string f_text, g_text, kind, csv_path;
    unsigned long p = 0, s = 0, S = 0, max_s = 0, trials = 100, max_deg = 3;
    long S_signed = -1;
    bool all_primes = false;
    unsigned long long seed = 0;
    long coeff_bound = 8;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "profile, bounds, and quotient group of a monic pair");
    analyze->add_option("--f", f_text, "first polynomial")->required();
    analyze->add_option("--g", g_text, "second polynomial")->required();
    CLI::Option* p_opt = analyze->add_option("--p", p, "prime to analyze");
    CLI::Option* all_opt = analyze->add_flag(
        "--all-primes", all_primes, "analyze every prime dividing the resultant");
    p_opt->excludes(all_opt);
    all_opt->excludes(p_opt);

    CLI::App* construct = app.add_subcommand(
        "construct", "emit and certify a sharpness pair");
    construct->add_option("--kind", kind, "large | small")->required();
    construct->add_option("--p", p, "prime")->required();
    construct->add_option("--s", s, "target minimum valuation")->required();
    construct->add_option("--S", S, "target maximum valuation (small only)");

    CLI::App* verify = app.add_subcommand(
        "verify", "randomized property suite over seeded monic pairs");
    verify->add_option("--seed", seed, "generator seed")->required();
    verify->add_option("--trials", trials, "number of pairs");
    verify->add_option("--max-deg", max_deg, "maximum degree");
    verify->add_option("--coeff-bound", coeff_bound, "coefficient bound");
    verify->add_option("--csv", csv_path, "per-trial csv log path");

    CLI::App* tables = app.add_subcommand(
        "tables", "alpha/beta/B tables for a prime");
    tables->add_option("--p", p, "prime")->required();
    tables->add_option("--max-s", max_s, "table upper bound")->required();

    CLI::App* kempner = app.add_subcommand(
        "kempner", "brute-force polynomial-function counts");
    kempner->add_option("--p", p, "prime")->required();
    kempner->add_option("--s", s, "valuation level")->required();
    kempner->add_option("--S", S_signed, "constant-term level (pair count)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    char* json = nullptr;
    if (analyze->parsed()) {
        if (!all_primes && p_opt->count() == 0) {
            std::fprintf(stderr, "error: analyze needs --p or --all-primes\n");
            return 2;
        }
        gcdval_status status =
            all_primes ? gcdval_analyze_all_primes_json(f_text.c_str(),
                                                        g_text.c_str(), &json)
                       : gcdval_analyze_json(f_text.c_str(), g_text.c_str(), p,
                                             &json);
        return finish(status, json);
    }
    if (construct->parsed()) {
        int certified = 0;
        gcdval_status status = gcdval_construct_json(kind.c_str(), p, s, S,
                                                     &certified, &json);
        int code = finish(status, json);
        if (code != 0) return code;
        if (!certified) {
            std::fprintf(stderr, "error: construction failed certification\n");
            return 1;
        }
        return 0;
    }
    if (verify->parsed()) {
        int all_passed = 0;
        gcdval_status status = gcdval_verify_json(
            seed, trials, max_deg, coeff_bound,
            csv_path.empty() ? nullptr : csv_path.c_str(), &all_passed, &json);
        int code = finish(status, json);
        if (code != 0) return code;
        if (!all_passed) {
            std::fprintf(stderr, "error: property violation found\n");
            return 1;
        }
        return 0;
    }
    if (tables->parsed()) {
        gcdval_status status = gcdval_tables_json(p, max_s, &json);
        return finish(status, json);
    }
    if (kempner->parsed()) {
        int match = 0;
        gcdval_status status =
            gcdval_kempner_json(p, s, S_signed, &match, &json);
        int code = finish(status, json);
        if (code != 0) return code;
        if (!match) {
            std::fprintf(stderr, "error: count does not match the predicted "
                                 "cardinality\n");
            return 1;
        }
        return 0;
    }
    return 2;
}
