#pragma once

#include <stdexcept>
#include <string>

namespace anharmonic {

// Thrown by numerical routines that could not deliver a result
// (step-size underflow, too few zero crossings, vanishing normalization).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Unit-mass, unit-frequency oscillator with potential x^2/2 + (lambda/2m) x^(2m).
class OscillatorSpec {
public:
    OscillatorSpec(int m, double lambda);

    int m() const noexcept { return m_; }
    double lambda() const noexcept { return lambda_; }

    // Degree of the nonlinear force term, 2m - 1.
    int force_degree() const noexcept { return 2 * m_ - 1; }

private:
    int m_;
    double lambda_;
};

struct InitialState {
    double x0 = 0.0;
    double v0 = 0.0;

    InitialState() = default;
    InitialState(double x, double v);
};

double hamiltonian_energy(const OscillatorSpec& spec, double x, double v);
double hamiltonian_energy(const OscillatorSpec& spec, const InitialState& state);

// m in {3, 4}: the orders with closed-form first-order solutions.
void require_closed_form_order(int m);

} // namespace anharmonic
