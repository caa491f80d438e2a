#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rml {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// (n)_t = n(n-1)...(n-t+1); zero when t > n.
BigInt falling_factorial(std::int64_t n, std::int64_t t);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Integer power base^exp for exp >= 0.
BigInt ipow(const BigInt& base, unsigned exp);

/// Rational power; negative exponents invert.
Rational rpow(const Rational& base, long exp);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v);

/// Nearest double to a rational (for reporting only).
double to_double(const Rational& v);

} // namespace rml
