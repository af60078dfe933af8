#pragma once

#include <iosfwd>
#include <map>
#include <tuple>
#include <vector>

#include "anharmonic/oscillator.hpp"
#include "anharmonic/rational.hpp"

namespace anharmonic {

// coeff * lambda^lambda_order * x0^x_power * v0^v_power
struct Monomial {
    int x_power = 0;
    int v_power = 0;
    int lambda_order = 0;
    Rational coeff;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// k-th time derivative of x at t = 0, truncated after the first power of lambda.
class DerivativePolynomial {
public:
    DerivativePolynomial() = default;
    DerivativePolynomial(int order, std::vector<Monomial> terms);

    int order() const noexcept { return order_; }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }

    // Zero when the monomial is absent.
    Rational coefficient(int x_power, int v_power, int lambda_order) const;

    double evaluate(double lambda, const InitialState& state) const;

    friend bool operator==(const DerivativePolynomial&, const DerivativePolynomial&) = default;

private:
    int order_ = 0;
    std::vector<Monomial> terms_; // sorted by (lambda_order, x_power descending)
};

// Generates successive derivatives of x(t) by differentiating along the flow
// x' = v, v' = -x - lambda x^(2m-1), dropping every lambda^2 contribution.
class DerivativeGenerator {
public:
    explicit DerivativeGenerator(int m);

    int m() const noexcept { return m_; }
    int order() const noexcept { return order_; }
    DerivativePolynomial current() const;
    void advance();

private:
    using Key = std::tuple<int, int, int>; // (lambda_order, x_power, v_power)
    int m_;
    int order_ = 0;
    std::map<Key, Rational> poly_;
};

// Entry k holds the k-th derivative, k = 0..max_order.
std::vector<DerivativePolynomial> derivative_polynomials(int m, int max_order);

// Nonzero lambda^1 contributions to the coefficient of x0^(2m-1-i) v0^i, in
// increasing Taylor order, before division by k!.
struct CoefficientSequence {
    int m = 0;
    int i = 0;
    std::vector<Rational> terms;
    std::vector<int> taylor_orders; // derivative order each entry came from
};

CoefficientSequence coefficient_sequence(int m, int i, int count);

// (-1)^r (25^r + 15*9^r + 240r - 16) / 384
Rational sextic_generator(int r);

double taylor_partial_sum(const OscillatorSpec& spec, const InitialState& state, double t, int max_order);

// Coefficient of t^k x0^(2m-1-i) v0^i in the lambda^1 part of x(t), k = 0..max_order.
std::vector<std::vector<Rational>> first_order_taylor_table(int m, int max_order);

// CSV rows (m, i, r, numerator, denominator) for every i and every nonzero
// sequence entry up to max_order; r counts from 1.
void write_coefficient_table(std::ostream& out, int m, int max_order = 16);
void write_coefficient_table(std::ostream& out, int m, int i, int count);

} // namespace anharmonic
