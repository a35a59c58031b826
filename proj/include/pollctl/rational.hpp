#ifndef POLLCTL_RATIONAL_HPP
#define POLLCTL_RATIONAL_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pollctl {

// All geometry, bounds and budgets are exact rationals; floating point is
// only used for display and for the high-precision fallback in the plane.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

// Accepts "12", "-3", "3/8", "-7/4", "0.375", "2.5e-1".  Decimal literals
// are converted exactly (terminating expansions only, which is all a
// decimal literal can express).  Throws Error(MALFORMED_DOCUMENT).
Rational rational_from_string(const std::string& text);

// "a" when the denominator is 1, otherwise "a/b" in lowest terms.
std::string rational_to_string(const Rational& q);

// Exact square root when one exists in the rationals (q >= 0).
std::optional<Rational> rational_sqrt_exact(const Rational& q);

// 50-digit approximation of sqrt(q), q >= 0.
Float50 rational_sqrt_approx(const Rational& q);

Float50 to_float(const Rational& q);

// Least common multiple of the denominators (>= 1).
BigInt common_denominator(const std::vector<Rational>& values);

}  // namespace pollctl

#endif
