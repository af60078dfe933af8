#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace anharmonic {

using BigInt = boost::multiprecision::cpp_int;

// Always canonical: denominator > 0, lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt factorial(int k);
BigInt binomial(int n, int k);
Rational rational_pow(const Rational& base, int exponent);

// Renders q as "p/denominator" without reducing; throws if q is not a multiple of 1/denominator.
std::string to_string_over(const Rational& q, const BigInt& denominator);

} // namespace anharmonic
