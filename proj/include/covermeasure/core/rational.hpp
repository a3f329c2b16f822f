#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace covermeasure {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

double to_double(const Rational& q);

/// Parses "p", "p/q" or a finite decimal ("0.125", "-3.5e-2") exactly.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& q);

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

}  // namespace covermeasure
