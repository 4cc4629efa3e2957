#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace actcond {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// `p/q` in lowest terms; integers keep the `/1` suffix.
std::string to_fraction_string(const Rational& value);

/// Like to_fraction_string but integers are printed without `/1`.
std::string to_compact_string(const Rational& value);

/// Rounded half-up (away from zero for ties) to `places` decimals.
std::string to_decimal_string(const Rational& value, int places = 2);

/// Accepts `p/q`, integers and plain decimals (`2.3` -> 23/10).
/// Throws RangeError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace actcond
