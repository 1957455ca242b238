/* gcdval: exact resultants, p-adic gcd valuation profiles, and the
 * combinatorial lower bounds and constructions attached to them.
 *
 * Conventions:
 *   - Every fallible call returns a gcdval_status; GCDVAL_OK is 0.
 *   - On failure, gcdval_last_error() returns a thread-local message that
 *     stays valid until the next failing call on the same thread.
 *   - Strings returned through char** are heap-allocated; release them with
 *     gcdval_string_free. Polynomials are opaque handles released with
 *     gcdval_poly_free.
 *   - Unbounded integers cross the boundary as decimal strings.
 */
#ifndef GCDVAL_H
#define GCDVAL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  if defined(GCDVAL_BUILDING_SHARED)
#    define GCDVAL_API __declspec(dllexport)
#  else
#    define GCDVAL_API __declspec(dllimport)
#  endif
#else
#  define GCDVAL_API __attribute__((visibility("default")))
#endif

typedef enum gcdval_status {
    GCDVAL_OK = 0,
    GCDVAL_EPARSE = 1,          /* polynomial text rejected */
    GCDVAL_ENOTMONIC = 2,       /* monic input required */
    GCDVAL_EZERORESULTANT = 3,  /* resultant vanishes */
    GCDVAL_ENOTPRIME = 4,       /* p is not prime */
    GCDVAL_EUNSUPPORTED = 5,    /* parameters outside the covered cases */
    GCDVAL_EGUARD = 6,          /* enumeration/factorization guard exceeded */
    GCDVAL_EBADARG = 7,         /* null pointer or malformed argument */
    GCDVAL_EINTERNAL = 8        /* invariant violation; indicates a bug */
} gcdval_status;

typedef struct gcdval_poly gcdval_poly;

GCDVAL_API const char* gcdval_version(void);
GCDVAL_API const char* gcdval_last_error(void);
GCDVAL_API void gcdval_string_free(char* s);
GCDVAL_API void gcdval_poly_free(gcdval_poly* f);

/* Polynomial text: expr := ['+'|'-'] term (('+'|'-') term)*;
 * term := factor ('*' factor)*; factor := base ('^' uint)?;
 * base := 'x' | uint | '(' expr ')'. Whitespace ignored, implicit
 * multiplication rejected. Formatting uses descending powers. */
GCDVAL_API gcdval_status gcdval_poly_parse(const char* text,
                                           gcdval_poly** out);
GCDVAL_API gcdval_status gcdval_poly_format(const gcdval_poly* f, char** out);
GCDVAL_API gcdval_status gcdval_poly_degree(const gcdval_poly* f, long* out);
GCDVAL_API gcdval_status gcdval_poly_is_monic(const gcdval_poly* f, int* out);
GCDVAL_API gcdval_status gcdval_poly_evaluate(const gcdval_poly* f,
                                              const char* n_decimal,
                                              char** out_decimal);
/* f(x + c) */
GCDVAL_API gcdval_status gcdval_poly_shift(const gcdval_poly* f,
                                           const char* c_decimal,
                                           gcdval_poly** out);
GCDVAL_API gcdval_status gcdval_poly_multiply(const gcdval_poly* a,
                                              const gcdval_poly* b,
                                              gcdval_poly** out);
/* Signed determinant of the Sylvester matrix; requires monic inputs. */
GCDVAL_API gcdval_status gcdval_resultant(const gcdval_poly* f,
                                          const gcdval_poly* g,
                                          char** out_decimal);

/* v_p(n); *finite = 0 and *value untouched when n = 0. */
GCDVAL_API gcdval_status gcdval_vp(const char* n_decimal, unsigned long p,
                                   int* finite, unsigned long* value);
GCDVAL_API gcdval_status gcdval_alpha(unsigned long j, unsigned long p,
                                      unsigned long* out);
GCDVAL_API gcdval_status gcdval_beta(unsigned long m, unsigned long p,
                                     unsigned long* out);
GCDVAL_API gcdval_status gcdval_big_b(unsigned long s, unsigned long p,
                                      unsigned long* out);
/* max_t B(s+t) - 2B(t) - s with its smallest maximizing t. */
GCDVAL_API gcdval_status gcdval_lb_general(unsigned long p, unsigned long s,
                                           long long* value,
                                           unsigned long* t);
/* p*s^2 - s; GCDVAL_EUNSUPPORTED when s > p. */
GCDVAL_API gcdval_status gcdval_lb_small(unsigned long p, unsigned long s,
                                         long long* value);

/* The *_json calls return a complete report document:
 * {tool, version, command, inputs, result}; byte-identical for identical
 * inputs. */
GCDVAL_API gcdval_status gcdval_analyze_json(const char* f_text,
                                             const char* g_text,
                                             unsigned long p, char** json_out);
GCDVAL_API gcdval_status gcdval_analyze_all_primes_json(const char* f_text,
                                                        const char* g_text,
                                                        char** json_out);
/* kind: "large" | "small"; S is ignored for "large". *certified reports
 * whether the emitted pair matched its expectations exactly. */
GCDVAL_API gcdval_status gcdval_construct_json(const char* kind,
                                               unsigned long p,
                                               unsigned long s,
                                               unsigned long S, int* certified,
                                               char** json_out);
/* csv_path may be NULL. *all_passed is 1 iff no property check failed. */
GCDVAL_API gcdval_status gcdval_verify_json(unsigned long long seed,
                                            unsigned long trials,
                                            unsigned long max_deg,
                                            long coeff_bound,
                                            const char* csv_path,
                                            int* all_passed, char** json_out);
GCDVAL_API gcdval_status gcdval_tables_json(unsigned long p,
                                            unsigned long max_s,
                                            char** json_out);
/* S_or_negative < 0 counts polynomial functions mod p^s; otherwise counts
 * pairs |R_{S,s}|. *match reports count == expected. */
GCDVAL_API gcdval_status gcdval_kempner_json(unsigned long p, unsigned long s,
                                             long S_or_negative, int* match,
                                             char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GCDVAL_H */
