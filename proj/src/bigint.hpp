#pragma once

#include <gmpxx.h>

#include <string>

namespace gcdval {

using Int = mpz_class;

inline Int pow_ui(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Int pow_ui(unsigned long base, unsigned long exp) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace gcdval
