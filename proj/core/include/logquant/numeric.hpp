#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace logquant {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Only the quarantined geometric parameters of the S^2 family use this.
using Real = boost::multiprecision::cpp_bin_float_50;

using RationalVector = std::vector<Rational>;

/// Exact "p/q" rendering; the denominator is always written, so 3 is "3/1".
std::string format_rational(const Rational& q);

/// Accepts "p/q", "p", and "int:p".  Throws Error(MalformedInput).
Rational parse_rational(std::string_view text);

/// Accepts a decimal integer with optional "int:" prefix.
Integer parse_integer(std::string_view text);

/// Narrowing with a SizeLimit error instead of silent truncation.
std::int64_t to_int64(const Integer& value, std::string_view what);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integral(const Rational& q);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Scales a nonzero rational vector to the unique primitive integer vector
/// pointing the same way.
std::vector<Integer> primitive_direction(const RationalVector& v);

}  // namespace logquant
