#include "anharmonic/operator_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace anharmonic {

namespace {

// (-i)^k
GaussianRational minus_i_power(int k)
{
    switch (k % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
    }
}

} // namespace

void OrderedPolynomial::add_term(const Key& key, const GaussianRational& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

OrderedPolynomial OrderedPolynomial::constant(GaussianRational c) { return monomial(0, 0, std::move(c)); }

OrderedPolynomial OrderedPolynomial::monomial(int x_power, int p_power, GaussianRational c)
{
    if (x_power < 0 || p_power < 0) throw std::invalid_argument("negative operator power");
    OrderedPolynomial out;
    out.add_term({x_power, p_power}, c);
    return out;
}

OrderedPolynomial OrderedPolynomial::word(std::string_view letters)
{
    OrderedPolynomial out = constant(Rational(1));
    const OrderedPolynomial x = monomial(1, 0);
    const OrderedPolynomial p = monomial(0, 1);
    for (char c : letters) {
        if (c == 'X') out = out * x;
        else if (c == 'P') out = out * p;
        else throw std::invalid_argument(std::string("unknown operator letter '") + c + "'");
    }
    return out;
}

GaussianRational OrderedPolynomial::coefficient(int x_power, int p_power) const
{
    auto it = terms_.find({x_power, p_power});
    return it == terms_.end() ? GaussianRational{} : it->second;
}

int OrderedPolynomial::degree() const
{
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
    return d;
}

OrderedPolynomial OrderedPolynomial::adjoint() const
{
    // (c X^j P^k)^dagger = conj(c) P^k X^j
    OrderedPolynomial out;
    for (const auto& [key, c] : terms_) {
        const OrderedPolynomial reordered = monomial(0, key.second) * monomial(key.first, 0);
        out += reordered * GaussianRational{c.re, -c.im};
    }
    return out;
}

OrderedPolynomial& OrderedPolynomial::operator+=(const OrderedPolynomial& other)
{
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

OrderedPolynomial& OrderedPolynomial::operator-=(const OrderedPolynomial& other)
{
    for (const auto& [key, c] : other.terms_) add_term(key, GaussianRational{} - c);
    return *this;
}

OrderedPolynomial& OrderedPolynomial::operator*=(const GaussianRational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, value] : terms_) value = value * c;
    return *this;
}

OrderedPolynomial operator*(const OrderedPolynomial& a, const OrderedPolynomial& b)
{
    // X^j P^k X^l P^q = sum_s C(k,s) l!/(l-s)! (-i)^s X^(j+l-s) P^(k+q-s)
    OrderedPolynomial out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const int j = ka.first, k = ka.second, l = kb.first, q = kb.second;
            const GaussianRational base = ca * cb;
            BigInt falling = 1; // l!/(l-s)!
            for (int s = 0; s <= std::min(k, l); ++s) {
                if (s > 0) falling *= l - s + 1;
                const Rational weight(binomial(k, s) * falling);
                out.add_term({j + l - s, k + q - s}, base * minus_i_power(s) * GaussianRational{weight});
            }
        }
    }
    return out;
}

std::string OrderedPolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << '(' << anharmonic::to_string(c.re);
        if (c.im != 0) os << (c.im > 0 ? "+" : "-") << anharmonic::to_string(abs(c.im)) << "i";
        os << ')';
        if (key.first > 0) os << " X^" << key.first;
        if (key.second > 0) os << " P^" << key.second;
    }
    return os.str();
}

OrderedPolynomial weyl_symmetrized(int x_power, int p_power)
{
    if (x_power < 0 || p_power < 0) throw std::invalid_argument("negative operator power");
    std::string letters(static_cast<std::size_t>(x_power), 'X');
    letters.append(static_cast<std::size_t>(p_power), 'P');
    std::sort(letters.begin(), letters.end());
    OrderedPolynomial sum;
    BigInt count = 0;
    do {
        sum += OrderedPolynomial::word(letters);
        ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    return sum * GaussianRational{Rational(BigInt(1), count)};
}

OrderedPolynomial two_term_symmetrized(int x_power, int p_power)
{
    const auto xa = OrderedPolynomial::monomial(x_power, 0);
    const auto pb = OrderedPolynomial::monomial(0, p_power);
    return (xa * pb + pb * xa) * GaussianRational{Rational(1, 2)};
}

OrderedPolynomial ordering_correction(int x_power, int p_power)
{
    return weyl_symmetrized(x_power, p_power) - two_term_symmetrized(x_power, p_power);
}

namespace {

// Sum over walks of the product of (level + 1) for every up-step; closed
// walks pair each up-step with a down-step over the same edge.
BigInt walk_sum(int level, int target, int steps_left, const BigInt& weight)
{
    if (std::abs(level - target) > steps_left) return 0;
    if (steps_left == 0) return weight;
    BigInt total = walk_sum(level + 1, target, steps_left - 1, weight * (level + 1));
    if (level > 0) total += walk_sum(level - 1, target, steps_left - 1, weight);
    return total;
}

} // namespace

Rational number_state_moment(int n, int power)
{
    if (n < 0 || power < 0) throw std::invalid_argument("number state and power must be non-negative");
    if (power % 2 == 1) return 0;
    return Rational(walk_sum(n, n, power, 1), boost::multiprecision::pow(BigInt(2), power / 2));
}

} // namespace anharmonic
