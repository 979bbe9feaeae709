#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rsg {

// Exact arithmetic for all cost bookkeeping. Inputs in game files are
// integers, finite decimals, or "p/q" strings, so int64 rationals cover
// everything without drift.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational &r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational &r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p", "p/q", and finite decimals like "-3.25".
Rational parse_rational(const std::string &text);

// Converts a double that is meant to be a short decimal (e.g. 0.47 from a
// config file) into an exact rational via its decimal expansion.
Rational rational_from_decimal(double value, int max_digits = 9);

} // namespace rsg
