#include "kempner.hpp"

#include <algorithm>
#include <unordered_set>

#include "errors.hpp"
#include "padic.hpp"

namespace gcdval {

FunctionTable function_table(const std::vector<std::uint64_t>& coeffs,
                             std::uint64_t modulus) {
    FunctionTable table;
    table.modulus = modulus;
    table.values.resize(modulus);
    for (std::uint64_t n = 0; n < modulus; ++n) {
        std::uint64_t acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = (acc * n + *it % modulus) % modulus;
        table.values[n] = acc;
    }
    return table;
}

namespace {

constexpr unsigned long kEnumerationGuard = 8000000;

using u128 = unsigned __int128;

struct U128Hash {
    std::size_t operator()(u128 v) const {
        std::uint64_t lo = static_cast<std::uint64_t>(v);
        std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
        return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

unsigned bit_width_for(std::uint64_t modulus) {
    unsigned b = 1;
    while ((std::uint64_t(1) << b) < modulus) ++b;
    return b;
}

void require_enumerable(const Int& candidates, const std::string& what) {
    if (candidates > kEnumerationGuard)
        throw GuardExceededError(what + ": " + candidates.get_str() +
                                 " candidate coefficient vectors exceed the "
                                 "enumeration guard (8e6)");
}

// Packs the value table of the current coefficient vector into one word.
std::uint64_t table_key(const std::vector<std::uint64_t>& coeffs,
                        std::uint64_t modulus, unsigned bits) {
    std::uint64_t key = 0;
    for (std::uint64_t n = 0; n < modulus; ++n) {
        std::uint64_t acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = (acc * n + *it % modulus) % modulus;
        key = (key << bits) | acc;
    }
    return key;
}

// Advances the odometer; radix(i) bounds coefficient i. False on wrap.
template <typename Radix>
bool advance(std::vector<std::uint64_t>& coeffs, Radix radix) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (++coeffs[i] < radix(i)) return true;
        coeffs[i] = 0;
    }
    return false;
}

}  // namespace

namespace detail {

std::size_t count_distinct_tables(unsigned long p, unsigned long s,
                                  unsigned long num_coeffs) {
    require_prime(p, "count_poly_functions");
    Int modulus_big = pow_ui(p, s);
    require_enumerable(pow_ui(modulus_big, num_coeffs),
                       "count_poly_functions");
    std::uint64_t modulus = modulus_big.get_ui();
    unsigned bits = bit_width_for(modulus);
    if (modulus * bits > 64)
        throw GuardExceededError(
            "count_poly_functions: table for modulus " +
            std::to_string(modulus) + " does not pack into one word");

    std::unordered_set<std::uint64_t> tables;
    std::vector<std::uint64_t> coeffs(num_coeffs, 0);
    do {
        tables.insert(table_key(coeffs, modulus, bits));
    } while (advance(coeffs, [&](std::size_t) { return modulus; }));
    return tables.size();
}

std::size_t count_distinct_pairs(unsigned long p, unsigned long S,
                                 unsigned long s, unsigned long num_coeffs,
                                 bool reduce) {
    require_prime(p, "count_R");
    if (S < s)
        throw UnsupportedCaseError("count_R: requires S >= s (got S = " +
                                   std::to_string(S) +
                                   ", s = " + std::to_string(s) + ")");
    Int big_mod_S = pow_ui(p, S);
    Int big_mod_s = pow_ui(p, s);
    Int tail = reduce ? big_mod_s : big_mod_S;
    Int candidates = num_coeffs == 0 ? Int(1)
                                     : big_mod_S * pow_ui(tail, num_coeffs - 1);
    require_enumerable(candidates, "count_R");
    std::uint64_t mod_S = big_mod_S.get_ui();
    std::uint64_t mod_s = big_mod_s.get_ui();
    std::uint64_t tail_radix = reduce ? mod_s : mod_S;
    unsigned bits = bit_width_for(mod_s);
    if (mod_s * bits > 64)
        throw GuardExceededError("count_R: table for modulus " +
                                 std::to_string(mod_s) +
                                 " does not pack into one word");

    std::unordered_set<u128, U128Hash> pairs;
    std::vector<std::uint64_t> coeffs(num_coeffs, 0);
    do {
        std::uint64_t c0 = num_coeffs == 0 ? 0 : coeffs[0] % mod_S;
        u128 key = (static_cast<u128>(c0) << 64) |
                   table_key(coeffs, mod_s, bits);
        pairs.insert(key);
    } while (advance(coeffs, [&](std::size_t i) {
        return i == 0 ? mod_S : tail_radix;
    }));
    return pairs.size();
}

}  // namespace detail

Int count_poly_functions(unsigned long p, unsigned long s) {
    return Int(static_cast<unsigned long>(
        detail::count_distinct_tables(p, s, beta(s, p))));
}

Int count_R(unsigned long p, unsigned long S, unsigned long s) {
    unsigned long num_coeffs = std::max(beta(s, p), 1UL);
    return Int(static_cast<unsigned long>(
        detail::count_distinct_pairs(p, S, s, num_coeffs, true)));
}

}  // namespace gcdval
