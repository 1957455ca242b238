#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "constructions.hpp"
#include "harness.hpp"
#include "kempner.hpp"
#include "matrix.hpp"
#include "valuation_range.hpp"

namespace gcdval {

using Json = nlohmann::ordered_json;

// All documents share the envelope {tool, version, command, inputs, result}
// with insertion-ordered keys, no timestamps, and large integers rendered as
// decimal strings, so identical invocations serialize byte-identically.
Json document(const std::string& command, Json inputs, Json result);
std::string render(const Json& doc);

Json profile_json(const ValuationProfile& profile);
Json bounds_json(const BoundReport& report);

// result payload of `analyze` for a single prime
Json analyze_json(const IntPolynomial& f, const IntPolynomial& g,
                  unsigned long p);
// result payload of `analyze --all-primes`
Json analyze_all_primes_json(const IntPolynomial& f, const IntPolynomial& g);
// result payload of `construct`; certified receives the certification verdict
Json construct_json(const Construction& construction, bool* certified);
// result payload of `verify`
Json verify_json(const SuiteReport& report);
// result payload of `tables`: alpha(0..beta(max_s)), beta(1..max_s),
// B(1..max_s)
Json tables_json(unsigned long p, unsigned long max_s);
// result payload of `kempner`; with_S selects the pair count |R_{S,s}|
Json kempner_json(unsigned long p, unsigned long s,
                  std::optional<unsigned long> S, bool* match);

}  // namespace gcdval
