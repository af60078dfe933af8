#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "anharmonic/rational.hpp"

namespace anharmonic {

// Element re + i*im of Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

// Polynomial in the canonical pair X, P with [X, P] = i, stored in standard
// order: sum of c_(j,k) X^j P^k.
class OrderedPolynomial {
public:
    using Key = std::pair<int, int>; // (power of X, power of P)

    OrderedPolynomial() = default;

    static OrderedPolynomial constant(GaussianRational c);
    static OrderedPolynomial monomial(int x_power, int p_power, GaussianRational c = Rational(1));
    // Product of a word such as "XXPXP".
    static OrderedPolynomial word(std::string_view letters);

    const std::map<Key, GaussianRational>& terms() const noexcept { return terms_; }
    GaussianRational coefficient(int x_power, int p_power) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const;

    // Hermitian conjugate, re-expressed in standard order.
    OrderedPolynomial adjoint() const;

    OrderedPolynomial& operator+=(const OrderedPolynomial& other);
    OrderedPolynomial& operator-=(const OrderedPolynomial& other);
    OrderedPolynomial& operator*=(const GaussianRational& c);

    friend OrderedPolynomial operator+(OrderedPolynomial a, const OrderedPolynomial& b) { return a += b; }
    friend OrderedPolynomial operator-(OrderedPolynomial a, const OrderedPolynomial& b) { return a -= b; }
    friend OrderedPolynomial operator*(OrderedPolynomial a, const GaussianRational& c) { return a *= c; }
    friend OrderedPolynomial operator*(const OrderedPolynomial& a, const OrderedPolynomial& b);
    friend bool operator==(const OrderedPolynomial& a, const OrderedPolynomial& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(const Key& key, const GaussianRational& c);
    std::map<Key, GaussianRational> terms_;
};

// Average of all C(a+b, a) distinct orderings of a X's and b P's.
OrderedPolynomial weyl_symmetrized(int x_power, int p_power);

// (X^a P^b + P^b X^a) / 2
OrderedPolynomial two_term_symmetrized(int x_power, int p_power);

// weyl_symmetrized - two_term_symmetrized: the lower-degree terms that the
// two-term form needs to equal the fully symmetric one.
OrderedPolynomial ordering_correction(int x_power, int p_power);

// <n| X^power |n> from closed walks on the number lattice.
Rational number_state_moment(int n, int power);

} // namespace anharmonic
