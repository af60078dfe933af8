#include "anharmonic/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "anharmonic/series.hpp"

namespace anharmonic {

namespace {

// Maclaurin coefficient of t^k in cos(jt) / sin(jt).
Rational trig_taylor(TrigKind kind, int j, int k)
{
    const bool even = k % 2 == 0;
    if ((kind == TrigKind::cosine) != even) return 0;
    const int half = kind == TrigKind::cosine ? k / 2 : (k - 1) / 2;
    Rational c(boost::multiprecision::pow(BigInt(j), k), factorial(k));
    return half % 2 == 0 ? c : Rational(-c);
}

// Maclaurin coefficient of t^k in t sin t / t cos t.
Rational secular_taylor(SecularKind kind, int k)
{
    if (k < 1) return 0;
    return trig_taylor(kind == SecularKind::t_sine ? TrigKind::sine : TrigKind::cosine, 1, k - 1);
}

// Solves a square system in place; throws on singular input.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::logic_error("singular system in harmonic fit");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / a[k][k];
    return x;
}

double trig(TrigKind kind, double arg) { return kind == TrigKind::cosine ? std::cos(arg) : std::sin(arg); }

std::string term_label(const HarmonicTerm& h)
{
    const std::string base = h.kind == TrigKind::cosine ? "cos" : "sin";
    return h.harmonic == 1 ? base + "t" : base + std::to_string(h.harmonic) + "t";
}

} // namespace

HarmonicDecomposition::HarmonicDecomposition(int i, std::vector<HarmonicTerm> harmonics, SecularTerm secular)
    : i_(i), harmonics_(std::move(harmonics)), secular_(std::move(secular))
{
    for (const auto& h : harmonics_)
        if (h.harmonic < 1 || h.harmonic % 2 == 0) throw std::invalid_argument("harmonics must be odd and positive");
    const BigInt den = common_denominator();
    scale_ = 1.0 / den.convert_to<double>();
    for (const auto& h : harmonics_) scaled_harmonics_.push_back(to_double(h.coeff * Rational(den)));
    scaled_secular_ = to_double(secular_.coeff * Rational(den));
}

BigInt HarmonicDecomposition::common_denominator() const
{
    BigInt den = denominator_of(secular_.coeff);
    for (const auto& h : harmonics_) den = boost::multiprecision::lcm(den, denominator_of(h.coeff));
    return den;
}

double HarmonicDecomposition::harmonic_value(double t) const
{
    // Integer numerators first so that the t = 0 cancellation is exact.
    double sum = 0.0;
    for (std::size_t k = 0; k < harmonics_.size(); ++k)
        sum += scaled_harmonics_[k] * trig(harmonics_[k].kind, harmonics_[k].harmonic * t);
    return sum * scale_;
}

double HarmonicDecomposition::secular_value(double t) const
{
    const double shape = secular_.kind == SecularKind::t_sine ? t * std::sin(t) : t * std::cos(t);
    return scaled_secular_ * shape * scale_;
}

Rational HarmonicDecomposition::taylor_coefficient(int k) const
{
    Rational sum = secular_.coeff * secular_taylor(secular_.kind, k);
    for (const auto& h : harmonics_) sum += h.coeff * trig_taylor(h.kind, h.harmonic, k);
    return sum;
}

std::vector<HarmonicDecomposition> fit_k_coefficients(int m)
{
    if (m < 2) throw std::invalid_argument("anharmonicity index m must be >= 2");
    const int force = 2 * m - 1;
    const int unknowns = 2 * m + 2;
    const auto table = first_order_taylor_table(m, unknowns - 1);

    // Column layout: cos(jt), sin(jt) for odd j <= 2m-1, then t sin t, t cos t.
    std::vector<std::vector<Rational>> basis(static_cast<std::size_t>(unknowns),
                                             std::vector<Rational>(static_cast<std::size_t>(unknowns)));
    for (int k = 0; k < unknowns; ++k) {
        for (int c = 0; c < m; ++c) {
            basis[k][c] = trig_taylor(TrigKind::cosine, 2 * c + 1, k);
            basis[k][m + c] = trig_taylor(TrigKind::sine, 2 * c + 1, k);
        }
        basis[k][2 * m] = secular_taylor(SecularKind::t_sine, k);
        basis[k][2 * m + 1] = secular_taylor(SecularKind::t_cosine, k);
    }

    std::vector<HarmonicDecomposition> out;
    for (int i = 0; i <= force; ++i) {
        const auto x = solve_exact(basis, table[i]);
        std::vector<HarmonicTerm> harmonics;
        for (int c = m - 1; c >= 0; --c) {
            if (x[c] != 0) harmonics.push_back({2 * c + 1, TrigKind::cosine, x[c]});
            if (x[m + c] != 0) harmonics.push_back({2 * c + 1, TrigKind::sine, x[m + c]});
        }
        const Rational& ts = x[2 * m];
        const Rational& tc = x[2 * m + 1];
        if ((ts != 0) == (tc != 0)) throw std::logic_error("K-coefficient fit must yield exactly one secular term");
        SecularTerm secular = ts != 0 ? SecularTerm{SecularKind::t_sine, ts} : SecularTerm{SecularKind::t_cosine, tc};
        out.emplace_back(i, std::move(harmonics), std::move(secular));
    }
    return out;
}

std::vector<HarmonicDecomposition> k_coefficients(int m)
{
    require_closed_form_order(m);
    return fit_k_coefficients(m);
}

Rational frequency_shift_coefficient(int m)
{
    if (m < 2) throw std::invalid_argument("anharmonicity index m must be >= 2");
    return Rational(binomial(2 * m - 1, m - 1), boost::multiprecision::pow(BigInt(2), 2 * m - 1));
}

double classical_frequency_shift(const OscillatorSpec& spec, double amplitude)
{
    const int m = spec.m();
    if (m < 2 || m > 4) throw std::invalid_argument("frequency shift supported for m in {2, 3, 4}");
    if (!(amplitude >= 0.0)) throw std::invalid_argument("amplitude must be non-negative");
    return spec.lambda() * std::pow(amplitude, 2 * m - 2) * to_double(frequency_shift_coefficient(m));
}

ClassicalSolution::ClassicalSolution(const OscillatorSpec& spec, const InitialState& state)
    : spec_(spec), state_(state), k_(k_coefficients(spec.m()))
{
    const int force = spec.force_degree();
    for (int i = 0; i <= force; ++i) monomials_.push_back(std::pow(state.x0, force - i) * std::pow(state.v0, i));
    amplitude_ = std::hypot(state.x0, state.v0);
    phase_ = std::atan2(state.v0, state.x0);
    shift_ = classical_frequency_shift(spec, amplitude_);
}

double ClassicalSolution::zeroth_order(double t) const { return state_.x0 * std::cos(t) + state_.v0 * std::sin(t); }

double ClassicalSolution::first_order(double t) const
{
    double correction = 0.0;
    for (std::size_t i = 0; i < k_.size(); ++i)
        if (monomials_[i] != 0.0) correction += k_[i].value(t) * monomials_[i];
    return zeroth_order(t) + spec_.lambda() * correction;
}

RenormalizedValue ClassicalSolution::renormalized(double t) const
{
    double correction = 0.0;
    for (std::size_t i = 0; i < k_.size(); ++i)
        if (monomials_[i] != 0.0) correction += k_[i].harmonic_value(t) * monomials_[i];
    RenormalizedValue out;
    out.x = amplitude_ * std::cos((1.0 + shift_) * t - phase_) + spec_.lambda() * correction;
    out.weak_coupling_warning = std::abs(shift_ * t) > 0.5;
    return out;
}

double first_order_solution(const OscillatorSpec& spec, const InitialState& state, double t)
{
    return ClassicalSolution(spec, state).first_order(t);
}

RenormalizedValue renormalized_solution(const OscillatorSpec& spec, const InitialState& state, double t)
{
    return ClassicalSolution(spec, state).renormalized(t);
}

void write_harmonic_table(std::ostream& out, int m)
{
    const auto ks = k_coefficients(m);
    BigInt den = 1;
    for (const auto& k : ks) den = boost::multiprecision::lcm(den, k.common_denominator());
    out << "m,i,term,coeff\n";
    for (const auto& k : ks) {
        for (const auto& h : k.harmonics())
            out << m << ',' << k.index() << ',' << term_label(h) << ',' << to_string_over(h.coeff, den) << '\n';
        const char* label = k.secular().kind == SecularKind::t_sine ? "t*sint" : "t*cost";
        out << m << ',' << k.index() << ',' << label << ',' << to_string_over(k.secular().coeff, den) << '\n';
    }
}

} // namespace anharmonic
