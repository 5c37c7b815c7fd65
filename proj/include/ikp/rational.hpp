#ifndef IKP_RATIONAL_HPP
#define IKP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ikp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

/// Numerator of an integral rational as long long. Pre: is_integral(r) and in range.
long long to_int(const Rational& r);

/// Parses "3", "-1.25" or "7/2" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

/// Exact textual form: integer or finite decimal when the reduced denominator
/// is of the form 2^a 5^b, "num/den" otherwise. Round-trips through
/// parse_rational.
std::string format_rational(const Rational& r);

/// Nearest-double approximation, for human-readable report fields only.
double approx(const Rational& r);

}  // namespace ikp

#endif
