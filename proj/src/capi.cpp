#include "gcdval.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bounds.hpp"
#include "errors.hpp"
#include "harness.hpp"
#include "matrix.hpp"
#include "padic.hpp"
#include "polynomial.hpp"
#include "report.hpp"
#include "version.hpp"

namespace {

thread_local std::string g_last_error;

gcdval_status fail(gcdval_status code, const char* msg) {
    g_last_error = msg;
    return code;
}

// Runs the body and maps the exception hierarchy onto status codes.
template <typename Fn>
gcdval_status guarded(Fn&& body) {
    using namespace gcdval;
    try {
        body();
        return GCDVAL_OK;
    } catch (const ParseError& e) {
        return fail(GCDVAL_EPARSE, e.what());
    } catch (const NotMonicError& e) {
        return fail(GCDVAL_ENOTMONIC, e.what());
    } catch (const ZeroResultantError& e) {
        return fail(GCDVAL_EZERORESULTANT, e.what());
    } catch (const NotPrimeError& e) {
        return fail(GCDVAL_ENOTPRIME, e.what());
    } catch (const UnsupportedCaseError& e) {
        return fail(GCDVAL_EUNSUPPORTED, e.what());
    } catch (const GuardExceededError& e) {
        return fail(GCDVAL_EGUARD, e.what());
    } catch (const Error& e) {
        return fail(GCDVAL_EBADARG, e.what());
    } catch (const std::exception& e) {
        return fail(GCDVAL_EINTERNAL, e.what());
    } catch (...) {
        return fail(GCDVAL_EINTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const gcdval::IntPolynomial& unwrap(const gcdval_poly* f) {
    return *reinterpret_cast<const gcdval::IntPolynomial*>(f);
}

gcdval_poly* wrap(gcdval::IntPolynomial p) {
    return reinterpret_cast<gcdval_poly*>(
        new gcdval::IntPolynomial(std::move(p)));
}

gcdval::Int parse_int(const char* decimal) {
    try {
        return gcdval::Int(decimal);
    } catch (const std::invalid_argument&) {
        throw gcdval::Error(std::string("not a decimal integer: ") + decimal);
    }
}

bool null_args() { return false; }
template <typename T, typename... Rest>
bool null_args(T* p, Rest... rest) {
    return p == nullptr || null_args(rest...);
}

}  // namespace

extern "C" {

const char* gcdval_version(void) { return gcdval::kVersion; }

const char* gcdval_last_error(void) { return g_last_error.c_str(); }

void gcdval_string_free(char* s) { std::free(s); }

void gcdval_poly_free(gcdval_poly* f) {
    delete reinterpret_cast<gcdval::IntPolynomial*>(f);
}

gcdval_status gcdval_poly_parse(const char* text, gcdval_poly** out) {
    if (null_args(text, out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *out = wrap(gcdval::parse_poly(text)); });
}

gcdval_status gcdval_poly_format(const gcdval_poly* f, char** out) {
    if (null_args(f, out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *out = dup_string(unwrap(f).str()); });
}

gcdval_status gcdval_poly_degree(const gcdval_poly* f, long* out) {
    if (null_args(f, out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *out = unwrap(f).degree(); });
}

gcdval_status gcdval_poly_is_monic(const gcdval_poly* f, int* out) {
    if (null_args(f, out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *out = unwrap(f).is_monic() ? 1 : 0; });
}

gcdval_status gcdval_poly_evaluate(const gcdval_poly* f, const char* n_decimal,
                                   char** out_decimal) {
    if (null_args(f, n_decimal, out_decimal))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        *out_decimal =
            dup_string(unwrap(f).evaluate(parse_int(n_decimal)).get_str());
    });
}

gcdval_status gcdval_poly_shift(const gcdval_poly* f, const char* c_decimal,
                                gcdval_poly** out) {
    if (null_args(f, c_decimal, out))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded(
        [&] { *out = wrap(unwrap(f).shift(parse_int(c_decimal))); });
}

gcdval_status gcdval_poly_multiply(const gcdval_poly* a, const gcdval_poly* b,
                                   gcdval_poly** out) {
    if (null_args(a, b, out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *out = wrap(unwrap(a) * unwrap(b)); });
}

gcdval_status gcdval_resultant(const gcdval_poly* f, const gcdval_poly* g,
                               char** out_decimal) {
    if (null_args(f, g, out_decimal))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        *out_decimal =
            dup_string(gcdval::resultant(unwrap(f), unwrap(g)).get_str());
    });
}

gcdval_status gcdval_vp(const char* n_decimal, unsigned long p, int* finite,
                        unsigned long* value) {
    if (null_args(n_decimal, finite, value))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        gcdval::Valuation v = gcdval::vp(parse_int(n_decimal), p);
        *finite = v.finite ? 1 : 0;
        if (v.finite) *value = v.value;
    });
}

gcdval_status gcdval_alpha(unsigned long j, unsigned long p,
                           unsigned long* out) {
    if (null_args(out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *out = gcdval::alpha(j, p); });
}

gcdval_status gcdval_beta(unsigned long m, unsigned long p,
                          unsigned long* out) {
    if (null_args(out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *out = gcdval::beta(m, p); });
}

gcdval_status gcdval_big_b(unsigned long s, unsigned long p,
                           unsigned long* out) {
    if (null_args(out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *out = gcdval::big_b(s, p); });
}

gcdval_status gcdval_lb_general(unsigned long p, unsigned long s,
                                long long* value, unsigned long* t) {
    if (null_args(value, t)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        gcdval::GeneralBound bound = gcdval::lb_general(p, s);
        *value = bound.value;
        *t = bound.t;
    });
}

gcdval_status gcdval_lb_small(unsigned long p, unsigned long s,
                              long long* value) {
    if (null_args(value)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] { *value = gcdval::lb_small(p, s); });
}

gcdval_status gcdval_analyze_json(const char* f_text, const char* g_text,
                                  unsigned long p, char** json_out) {
    if (null_args(f_text, g_text, json_out))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        gcdval::IntPolynomial f = gcdval::parse_poly(f_text);
        gcdval::IntPolynomial g = gcdval::parse_poly(g_text);
        gcdval::Json inputs;
        inputs["f"] = f.str();
        inputs["g"] = g.str();
        inputs["p"] = p;
        gcdval::Json doc = gcdval::document(
            "analyze", std::move(inputs), gcdval::analyze_json(f, g, p));
        *json_out = dup_string(gcdval::render(doc));
    });
}

gcdval_status gcdval_analyze_all_primes_json(const char* f_text,
                                             const char* g_text,
                                             char** json_out) {
    if (null_args(f_text, g_text, json_out))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        gcdval::IntPolynomial f = gcdval::parse_poly(f_text);
        gcdval::IntPolynomial g = gcdval::parse_poly(g_text);
        gcdval::Json inputs;
        inputs["f"] = f.str();
        inputs["g"] = g.str();
        inputs["all_primes"] = true;
        gcdval::Json doc =
            gcdval::document("analyze", std::move(inputs),
                             gcdval::analyze_all_primes_json(f, g));
        *json_out = dup_string(gcdval::render(doc));
    });
}

gcdval_status gcdval_construct_json(const char* kind, unsigned long p,
                                    unsigned long s, unsigned long S,
                                    int* certified, char** json_out) {
    if (null_args(kind, certified, json_out))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        std::string kind_str(kind);
        gcdval::Construction construction;
        gcdval::Json inputs;
        inputs["kind"] = kind_str;
        inputs["p"] = p;
        inputs["s"] = s;
        if (kind_str == "large") {
            construction = gcdval::construct_large(p, s);
        } else if (kind_str == "small") {
            inputs["S"] = S;
            construction = gcdval::construct_small(p, s, S);
        } else {
            throw gcdval::Error("construct: kind must be 'large' or 'small'");
        }
        bool ok = false;
        gcdval::Json result = gcdval::construct_json(construction, &ok);
        *certified = ok ? 1 : 0;
        gcdval::Json doc = gcdval::document("construct", std::move(inputs),
                                            std::move(result));
        *json_out = dup_string(gcdval::render(doc));
    });
}

gcdval_status gcdval_verify_json(unsigned long long seed, unsigned long trials,
                                 unsigned long max_deg, long coeff_bound,
                                 const char* csv_path, int* all_passed,
                                 char** json_out) {
    if (null_args(all_passed, json_out))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        if (trials == 0) throw gcdval::Error("verify: trials must be >= 1");
        if (max_deg == 0) throw gcdval::Error("verify: max_deg must be >= 1");
        if (coeff_bound <= 0)
            throw gcdval::Error("verify: coeff_bound must be >= 1");
        gcdval::SuiteReport report = gcdval::random_property_suite(
            seed, trials, max_deg, coeff_bound,
            csv_path ? std::string(csv_path) : std::string());
        *all_passed = report.all_passed() ? 1 : 0;
        gcdval::Json inputs;
        inputs["seed"] = seed;
        inputs["trials"] = trials;
        inputs["max_deg"] = max_deg;
        inputs["coeff_bound"] = coeff_bound;
        gcdval::Json doc = gcdval::document("verify", std::move(inputs),
                                            gcdval::verify_json(report));
        *json_out = dup_string(gcdval::render(doc));
    });
}

gcdval_status gcdval_tables_json(unsigned long p, unsigned long max_s,
                                 char** json_out) {
    if (null_args(json_out)) return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        gcdval::Json inputs;
        inputs["p"] = p;
        inputs["max_s"] = max_s;
        gcdval::Json doc = gcdval::document("tables", std::move(inputs),
                                            gcdval::tables_json(p, max_s));
        *json_out = dup_string(gcdval::render(doc));
    });
}

gcdval_status gcdval_kempner_json(unsigned long p, unsigned long s,
                                  long S_or_negative, int* match,
                                  char** json_out) {
    if (null_args(match, json_out))
        return fail(GCDVAL_EBADARG, "null argument");
    return guarded([&] {
        std::optional<unsigned long> S;
        if (S_or_negative >= 0)
            S = static_cast<unsigned long>(S_or_negative);
        gcdval::Json inputs;
        inputs["p"] = p;
        inputs["s"] = s;
        if (S) inputs["S"] = *S;
        bool equal = false;
        gcdval::Json result = gcdval::kempner_json(p, s, S, &equal);
        *match = equal ? 1 : 0;
        gcdval::Json doc = gcdval::document("kempner", std::move(inputs),
                                            std::move(result));
        *json_out = dup_string(gcdval::render(doc));
    });
}

}  // extern "C"
