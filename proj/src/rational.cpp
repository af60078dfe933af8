#include "anharmonic/rational.hpp"

#include <stdexcept>

namespace anharmonic {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q)
{
    const BigInt den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

BigInt factorial(int k)
{
    if (k < 0) throw std::invalid_argument("factorial of negative integer");
    BigInt out = 1;
    for (int j = 2; j <= k; ++j) out *= j;
    return out;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int j = 1; j <= k; ++j) {
        out *= n - k + j;
        out /= j;
    }
    return out;
}

Rational rational_pow(const Rational& base, int exponent)
{
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return Rational(1) / rational_pow(base, -exponent);
    }
    Rational out = 1;
    for (int j = 0; j < exponent; ++j) out *= base;
    return out;
}

std::string to_string_over(const Rational& q, const BigInt& denominator)
{
    const Rational scaled = q * Rational(denominator);
    if (denominator_of(scaled) != 1)
        throw std::invalid_argument("value " + to_string(q) + " is not a multiple of 1/" + denominator.str());
    return numerator_of(scaled).str() + "/" + denominator.str();
}

} // namespace anharmonic
