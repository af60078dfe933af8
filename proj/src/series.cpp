#include "anharmonic/series.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace anharmonic {

DerivativePolynomial::DerivativePolynomial(int order, std::vector<Monomial> terms)
    : order_(order), terms_(std::move(terms))
{
    std::erase_if(terms_, [](const Monomial& mono) { return mono.coeff == 0; });
    std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
        return std::tie(a.lambda_order, b.x_power, a.v_power) < std::tie(b.lambda_order, a.x_power, b.v_power);
    });
    for (std::size_t k = 1; k < terms_.size(); ++k) {
        const auto& a = terms_[k - 1];
        const auto& b = terms_[k];
        if (a.x_power == b.x_power && a.v_power == b.v_power && a.lambda_order == b.lambda_order)
            throw std::invalid_argument("duplicate monomial in derivative polynomial");
    }
}

Rational DerivativePolynomial::coefficient(int x_power, int v_power, int lambda_order) const
{
    for (const auto& mono : terms_)
        if (mono.x_power == x_power && mono.v_power == v_power && mono.lambda_order == lambda_order) return mono.coeff;
    return 0;
}

double DerivativePolynomial::evaluate(double lambda, const InitialState& state) const
{
    double sum = 0.0;
    for (const auto& mono : terms_) {
        double value = to_double(mono.coeff) * std::pow(state.x0, mono.x_power) * std::pow(state.v0, mono.v_power);
        if (mono.lambda_order == 1) value *= lambda;
        sum += value;
    }
    return sum;
}

DerivativeGenerator::DerivativeGenerator(int m) : m_(m)
{
    if (m < 2) throw std::invalid_argument("anharmonicity index m must be >= 2");
    poly_[{0, 1, 0}] = 1;
}

DerivativePolynomial DerivativeGenerator::current() const
{
    std::vector<Monomial> terms;
    terms.reserve(poly_.size());
    for (const auto& [key, coeff] : poly_) {
        const auto [lam, a, b] = key;
        terms.push_back({a, b, lam, coeff});
    }
    return {order_, std::move(terms)};
}

void DerivativeGenerator::advance()
{
    const int force = 2 * m_ - 1;
    std::map<Key, Rational> next;
    for (const auto& [key, coeff] : poly_) {
        const auto [lam, a, b] = key;
        // d/dt x^a = a x^(a-1) v
        if (a > 0) next[{lam, a - 1, b + 1}] += coeff * a;
        // d/dt v^b = b v^(b-1) (-x - lambda x^(2m-1)); lambda^2 terms dropped
        if (b > 0) {
            next[{lam, a + 1, b - 1}] -= coeff * b;
            if (lam == 0) next[{1, a + force, b - 1}] -= coeff * b;
        }
    }
    std::erase_if(next, [](const auto& entry) { return entry.second == 0; });
    poly_ = std::move(next);
    ++order_;
}

std::vector<DerivativePolynomial> derivative_polynomials(int m, int max_order)
{
    if (max_order < 0) throw std::invalid_argument("max_order must be non-negative");
    DerivativeGenerator gen(m);
    std::vector<DerivativePolynomial> out;
    out.reserve(static_cast<std::size_t>(max_order) + 1);
    out.push_back(gen.current());
    for (int k = 1; k <= max_order; ++k) {
        gen.advance();
        out.push_back(gen.current());
    }
    return out;
}

CoefficientSequence coefficient_sequence(int m, int i, int count)
{
    const int force = 2 * m - 1;
    if (i < 0 || i > force)
        throw std::out_of_range("monomial index i must lie in [0, " + std::to_string(force) + "]");
    if (count < 1) throw std::invalid_argument("count must be >= 1");

    CoefficientSequence seq{m, i, {}, {}};
    DerivativeGenerator gen(m);
    // Nonzero entries occur at every other order once the lambda part appears.
    const int order_limit = 2 * count + 2 * force + 8;
    while (static_cast<int>(seq.terms.size()) < count) {
        gen.advance();
        if (gen.order() > order_limit)
            throw std::logic_error("coefficient sequence exhausted before reaching requested count");
        const Rational c = gen.current().coefficient(force - i, i, 1);
        if (c != 0) {
            seq.terms.push_back(c);
            seq.taylor_orders.push_back(gen.order());
        }
    }
    return seq;
}

Rational sextic_generator(int r)
{
    if (r < 0) throw std::invalid_argument("generator index must be non-negative");
    const BigInt value = boost::multiprecision::pow(BigInt(25), r) + 15 * boost::multiprecision::pow(BigInt(9), r)
                         + 240 * BigInt(r) - 16;
    Rational out(value, BigInt(384));
    return r % 2 == 0 ? out : Rational(-out);
}

double taylor_partial_sum(const OscillatorSpec& spec, const InitialState& state, double t, int max_order)
{
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    DerivativeGenerator gen(spec.m());
    double sum = state.x0;
    double power = 1.0; // t^k / k!
    for (int k = 1; k <= max_order; ++k) {
        gen.advance();
        power *= t / k;
        sum += gen.current().evaluate(spec.lambda(), state) * power;
    }
    return sum;
}

std::vector<std::vector<Rational>> first_order_taylor_table(int m, int max_order)
{
    const int force = 2 * m - 1;
    const auto derivs = derivative_polynomials(m, max_order);
    std::vector<std::vector<Rational>> table(static_cast<std::size_t>(force) + 1,
                                             std::vector<Rational>(static_cast<std::size_t>(max_order) + 1));
    for (int k = 0; k <= max_order; ++k) {
        const Rational inv_fact(BigInt(1), factorial(k));
        for (int i = 0; i <= force; ++i) table[i][k] = derivs[k].coefficient(force - i, i, 1) * inv_fact;
    }
    return table;
}

namespace {

void write_rows(std::ostream& out, const CoefficientSequence& seq)
{
    for (std::size_t r = 0; r < seq.terms.size(); ++r)
        out << seq.m << ',' << seq.i << ',' << (r + 1) << ',' << numerator_of(seq.terms[r]) << ','
            << denominator_of(seq.terms[r]) << '\n';
}

} // namespace

void write_coefficient_table(std::ostream& out, int m, int max_order)
{
    const int force = 2 * m - 1;
    const auto derivs = derivative_polynomials(m, max_order);
    out << "m,i,r,numerator,denominator\n";
    for (int i = 0; i <= force; ++i) {
        CoefficientSequence seq{m, i, {}, {}};
        for (int k = 1; k <= max_order; ++k) {
            const Rational c = derivs[k].coefficient(force - i, i, 1);
            if (c != 0) {
                seq.terms.push_back(c);
                seq.taylor_orders.push_back(k);
            }
        }
        write_rows(out, seq);
    }
}

void write_coefficient_table(std::ostream& out, int m, int i, int count)
{
    out << "m,i,r,numerator,denominator\n";
    write_rows(out, coefficient_sequence(m, i, count));
}

} // namespace anharmonic
