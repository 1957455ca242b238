#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bigint.hpp"

namespace gcdval {

// The function Z/p^s -> Z/p^s induced by a polynomial: values[i] = f(i) mod
// p^s. The counting unit for the polynomial-function cardinalities.
struct FunctionTable {
    std::uint64_t modulus = 1;  // p^s
    std::vector<std::uint64_t> values;

    bool operator==(const FunctionTable&) const = default;
};

FunctionTable function_table(const std::vector<std::uint64_t>& coeffs,
                             std::uint64_t modulus);

// Number of distinct function tables over polynomials of degree < beta(s)
// with coefficients in [0, p^s). Equals p^B(s); degree bound is sufficient
// because prod_{j<beta(s)} (x-j) induces the zero function mod p^s.
// Enumeration guard: at most 8e6 candidate coefficient vectors.
Int count_poly_functions(unsigned long p, unsigned long s);

// Number of distinct pairs (function table mod p^s, constant term mod p^S)
// over polynomials of degree < beta(s) with coefficients in [0, p^S).
// Equals p^(S-s+B(s)). Requires S >= s. The pair depends on the non-constant
// coefficients only mod p^s, so they are enumerated in [0, p^s) (the full
// space maps onto the reduced one), keeping the candidate count within the
// guard.
Int count_R(unsigned long p, unsigned long S, unsigned long s);

namespace detail {

// Enumeration cores, parameterized for oracle tests: num_coeffs enumerated
// coefficients (table counting), reduce=false forces the full [0, p^S)
// enumeration of non-constant coefficients in pair counting.
std::size_t count_distinct_tables(unsigned long p, unsigned long s,
                                  unsigned long num_coeffs);
std::size_t count_distinct_pairs(unsigned long p, unsigned long S,
                                 unsigned long s, unsigned long num_coeffs,
                                 bool reduce);

}  // namespace detail

}  // namespace gcdval
