#ifndef BICOEFF_RATIONAL_HPP
#define BICOEFF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicoeff {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always canonical: denominator > 0, gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// Renders "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "3", "-3/4", "0.25", "1e-3", "2.5e2" into an exact rational.
/// Decimal strings convert exactly (0.1 -> 1/10), so CLI inputs like "1/3"
/// and "0.95" both mean what they say.
Rational rational_from_string(std::string_view text);

}  // namespace bicoeff

#endif
