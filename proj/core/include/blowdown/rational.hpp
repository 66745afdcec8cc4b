#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

namespace blowdown {

// Arbitrary-precision scalars. cpp_rational keeps values canonical:
// numerator and denominator coprime, denominator > 0.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    return Rational(num, den);
}

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

Integer gcd(const Integer& a, const Integer& b);

// "num/den" or "num"; accepts a leading sign.
Rational rational_from_string(const std::string& text);

// Plain fraction rendering: "45/8", "-3", "0".
std::string rational_to_string(const Rational& r);

// Exact positional rendering with the repetend in parentheses:
// 45/8 -> "5.625", 17/24 -> "0.708(3)", 1/3 -> "0.(3)".
// Returns nullopt when the repetend exceeds max_period digits.
std::optional<std::string> decimal_render(const Rational& r, std::size_t max_period = 4096);

// Inverse of decimal_render; also accepts plain "num/den" fractions.
Rational decimal_parse(const std::string& text);

} // namespace blowdown
