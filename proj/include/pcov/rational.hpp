#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace pcov {

/// Exact rational arithmetic for all instance data and oracles.
/// Only the LP layer works in floating point.
using Rational = boost::rational<long long>;

/// Parses "12", "-3.25" or "7/2" into an exact rational.
/// Throws SyntaxError on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
/// parse_rational(format_rational(r)) == r for every r.
std::string format_rational(const Rational& r);

long long rational_ceil(const Rational& r);
long long rational_floor(const Rational& r);

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

} // namespace pcov
