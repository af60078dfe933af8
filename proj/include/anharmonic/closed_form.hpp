#pragma once

#include <iosfwd>
#include <vector>

#include "anharmonic/oscillator.hpp"
#include "anharmonic/rational.hpp"

namespace anharmonic {

enum class TrigKind { cosine, sine };
enum class SecularKind { t_sine, t_cosine };

// coeff * cos(harmonic t) or coeff * sin(harmonic t)
struct HarmonicTerm {
    int harmonic = 1;
    TrigKind kind = TrigKind::cosine;
    Rational coeff;
};

// coeff * t sin t or coeff * t cos t
struct SecularTerm {
    SecularKind kind = SecularKind::t_sine;
    Rational coeff;
};

// K_i(t): the time dependence multiplying lambda x0^(2m-1-i) v0^i in the
// first-order solution. K_i(0) = K_i'(0) = 0.
class HarmonicDecomposition {
public:
    HarmonicDecomposition(int i, std::vector<HarmonicTerm> harmonics, SecularTerm secular);

    int index() const noexcept { return i_; }
    const std::vector<HarmonicTerm>& harmonics() const noexcept { return harmonics_; }
    const SecularTerm& secular() const noexcept { return secular_; }

    // Smallest common denominator of every coefficient.
    BigInt common_denominator() const;

    double value(double t) const { return harmonic_value(t) + secular_value(t); }
    double harmonic_value(double t) const;
    double secular_value(double t) const;

    // Exact coefficient of t^k in the Maclaurin expansion.
    Rational taylor_coefficient(int k) const;

private:
    int i_;
    std::vector<HarmonicTerm> harmonics_;
    SecularTerm secular_;
    double scale_ = 1.0;                  // 1 / common denominator
    std::vector<double> scaled_harmonics_; // integer numerators over the common denominator
    double scaled_secular_ = 0.0;
};

// K_0 .. K_(2m-1), obtained by matching the exact series coefficients against
// odd harmonics up to 2m-1 plus one secular term each. m in {3, 4}.
std::vector<HarmonicDecomposition> k_coefficients(int m);

// Same fit for any m >= 2; used by the shift and oracle paths.
std::vector<HarmonicDecomposition> fit_k_coefficients(int m);

// binom(2m-1, m-1) / 2^(2m-1): the frequency shift is lambda a^(2m-2) times this.
Rational frequency_shift_coefficient(int m);

double classical_frequency_shift(const OscillatorSpec& spec, double amplitude);

struct RenormalizedValue {
    double x = 0.0;
    bool weak_coupling_warning = false; // |shift * t| > 0.5
};

// Evaluates the zeroth-order, first-order and resummed solutions for one
// initial state. Caches the K-coefficients in floating point.
class ClassicalSolution {
public:
    ClassicalSolution(const OscillatorSpec& spec, const InitialState& state);

    double zeroth_order(double t) const;
    double first_order(double t) const;
    RenormalizedValue renormalized(double t) const;

    double amplitude() const noexcept { return amplitude_; }
    double phase() const noexcept { return phase_; }
    double frequency_shift() const noexcept { return shift_; }

private:
    OscillatorSpec spec_;
    InitialState state_;
    std::vector<HarmonicDecomposition> k_;
    std::vector<double> monomials_; // x0^(2m-1-i) v0^i
    double amplitude_;
    double phase_;
    double shift_;
};

double first_order_solution(const OscillatorSpec& spec, const InitialState& state, double t);
RenormalizedValue renormalized_solution(const OscillatorSpec& spec, const InitialState& state, double t);

// Columns m, i, term, coeff with coeff rendered over the common denominator (384 or 3072).
void write_harmonic_table(std::ostream& out, int m);

} // namespace anharmonic
