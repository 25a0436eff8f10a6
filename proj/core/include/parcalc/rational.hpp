#ifndef PARCALC_RATIONAL_HPP_
#define PARCALC_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

namespace parcalc {

/// All metric formulas are evaluated in exact rational arithmetic so that the
/// model's algebraic identities hold with zero tolerance. 64-bit components
/// are ample for the magnitudes this model produces.
using Rational = boost::rational<std::int64_t>;

/// JSON document type used across the library. Insertion order is preserved,
/// which keeps emitted files byte-stable.
using Json = nlohmann::ordered_json;

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& r, int significant_digits = 12);

double to_double(const Rational& r);

/// Parses "p" or "p/q". Throws ValidationError on anything else.
Rational rational_from_string(const std::string& text);

/// {"num": p, "den": q, "dec": "..."}
Json rational_to_json(const Rational& r);

/// Accepts an integer number, a "p/q" (or "p") string, or a {num, den}
/// object. Non-integer JSON numbers are rejected: exact values must be
/// written as rationals.
Rational rational_from_json(const Json& j);

}  // namespace parcalc

#endif  // PARCALC_RATIONAL_HPP_
